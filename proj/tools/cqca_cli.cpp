#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <cqca/cochain.hpp>
#include <cqca/equivalence.hpp>
#include <cqca/io.hpp>
#include <cqca/isa.hpp>
#include <cqca/lattice.hpp>
#include <cqca/qca.hpp>

using namespace cqca;

namespace {

struct usage_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct selector {
  std::string family = "3f";
  int dim = 0;
  int l = 0;
  std::uint32_t p = 0;
  long long k = 1;
  std::string kind = "z2";
  std::string m;
  std::vector<int> L;
  int degree = 0, level = 0;
  std::uint32_t modulus = 7;
  bool all = false;
  std::string input;
};

struct output {
  std::string format = "text";
  std::string path;
};

// Report text plus exit status.
struct result {
  int status = 0;
  std::string text;
};

qca_spec spec_of(const selector& s) {
  qca_spec q;
  if (s.family == "3f") {
    q.family = qca_family::three_fermion;
    q.d = 2;
    if (s.p && s.p != 2) throw usage_error("--p: the three-fermion family lives over Z_2");
    if (s.dim && s.dim % 2 == 0) throw usage_error("--dim: the three-fermion family needs an odd dimension");
    q.l = s.l ? s.l : (s.dim ? (s.dim + 1) / 2 : 2);
  } else if (s.family == "zp" || s.family == "zp-beta") {
    q.family = s.family == "zp" ? qca_family::zp_alpha : qca_family::zp_beta;
    if (!s.p) throw usage_error("--p is required for the Z_p families");
    q.d = s.p;
    q.k = s.k;
    if (s.dim && (s.dim + 1) % 4) throw usage_error("--dim: Z_p families live in dimensions 4l-1");
    q.l = s.l ? s.l : (s.dim ? (s.dim + 1) / 4 : 1);
  } else {
    throw usage_error("--family: expected 3f, zp or zp-beta, got " + s.family);
  }
  if (s.dim && s.dim != q.dim()) throw usage_error("--dim and --l disagree");
  return q;
}

torus_shape shape_of(const selector& s, int D) {
  if (s.L.empty()) throw usage_error("--L is required");
  if (static_cast<int>(s.L.size()) != D) throw usage_error("--L needs " + std::to_string(D) + " lengths");
  return torus_shape(s.L);
}

std::string mismatch_text(const entry_mismatch& m) {
  return "first failing entry: " + m.what + " (row " + std::to_string(m.row) + ", col " + std::to_string(m.col) +
         ", expected " + m.expected + ", got " + m.got + ")";
}

// Structural checks for one member of a family; returns the first failure.
std::optional<entry_mismatch> verify_family(const qca_spec& s, json& report) {
  auto t = build(s);
  report["spec"] = to_json(s);
  const bool symp = is_symplectic(t);
  report["symplectic"] = symp;
  if (!symp) {
    auto l = lambda_form(t.q(), t.modulus(), t.dim());
    return compare("symplectic form", l, pairing_matrix(t.matrix(), t.matrix()));
  }
  auto one = identity(2 * t.q(), t.modulus(), t.dim());
  if (s.family == qca_family::three_fermion) {
    auto m = compare("alpha^2", one, compose(t, t).matrix());
    report["squares_to_identity"] = !m;
    if (m) return m;
    auto u = three_fermion_hopping(s.l);
    m = compare("hopping columns", u, t.matrix() * u);
    report["hopping_fixed"] = !m;
    return m;
  }
  if (s.family == qca_family::zp_alpha) {
    auto u = zp_hopping(s.l, s.d, s.k);
    auto m = compare("hopping columns", u, t.matrix() * u);
    report["hopping_fixed"] = !m;
    if (m) return m;
    m = compare("beta^(-k) alpha^(k)", one, compose(build_zp_beta_general(s.l, s.d, -s.k), t).matrix());
    report["beta_inverts"] = !m;
    return m;
  }
  auto u = zp_hopping(s.l, s.d, -s.k);
  auto m = compare("hopping columns", u, t.matrix() * u);
  report["hopping_fixed"] = !m;
  return m;
}

result run_construct(const selector& sel, const output& out) {
  auto s = spec_of(sel);
  auto t = build(s);
  if (out.format == "json") {
    json j = {{"spec", to_json(s)}};
    j.update(to_json(t));
    return {0, j.dump(2) + "\n"};
  }
  return {0, to_text(t.matrix())};
}

// Compares a supplied matrix (bare or as written by construct --format json) with the construction.
result verify_input(const selector& sel, const output& out) {
  auto s = spec_of(sel);
  std::ifstream f(sel.input);
  if (!f) throw usage_error("--input: cannot open " + sel.input);
  poly_matrix given;
  try {
    auto j = json::parse(f);
    given = matrix_from_json(j.contains("matrix") ? j["matrix"] : j);
  } catch (const std::exception& e) {
    throw usage_error(std::string("--input: ") + e.what());
  }
  auto t = build(s);
  auto m = compare("supplied matrix", t.matrix(), given);
  json r = {{"spec", to_json(s)}, {"input", sel.input}, {"verified", !m}};
  if (!m) r["symplectic"] = is_symplectic(symplectic_map(given));
  if (m) r["failure"] = to_json(*m);
  if (out.format == "json") return {m ? 1 : 0, r.dump(2) + "\n"};
  return {m ? 1 : 0, m ? "FAILED; " + mismatch_text(*m) + "\n" : "supplied matrix matches the construction; verified\n"};
}

result run_verify(const selector& sel, const output& out) {
  if (!sel.input.empty()) return verify_input(sel, out);
  std::vector<qca_spec> specs;
  if (sel.all) {
    specs.push_back({qca_family::three_fermion, 2, 2, 1});
    specs.push_back({qca_family::three_fermion, 3, 2, 1});
    for (std::uint32_t p : {3u, 5u, 7u, 11u, 13u})
      for (long long k : {1LL, 2LL}) {
        specs.push_back({qca_family::zp_alpha, 1, p, k});
        specs.push_back({qca_family::zp_beta, 1, p, k});
      }
  } else {
    specs.push_back(spec_of(sel));
  }
  json all = json::array();
  std::string text;
  int status = 0;
  for (auto& s : specs) {
    json r;
    auto m = verify_family(s, r);
    r["verified"] = !m;
    if (m) {
      r["failure"] = to_json(*m);
      status = 1;
    }
    all.push_back(r);
    text += family_name(s.family) + " dim " + std::to_string(s.dim()) + " p " + std::to_string(s.d) + " k " +
            std::to_string(s.k) + ": " + (m ? "FAILED; " + mismatch_text(*m) : "verified") + "\n";
  }
  if (out.format == "json") return {status, (sel.all ? all : all[0]).dump(2) + "\n"};
  return {status, text};
}

result run_order(const selector& sel, const output& out) {
  auto s = spec_of(sel);
  if (s.family == qca_family::three_fermion) {
    auto t = build(s);
    auto m = compare("alpha^2", identity(2 * t.q(), 2, t.dim()), power(t, 2).matrix());
    if (out.format == "json") {
      json j = {{"target", to_json(s)}, {"claimed_order", 2}, {"verified", !m}};
      if (m) j["failure"] = to_json(*m);
      return {m ? 1 : 0, j.dump(2) + "\n"};
    }
    return {m ? 1 : 0, m ? "order 2 NOT verified; " + mismatch_text(*m) + "\n" : "order 2; alpha^2 = I; verified\n"};
  }
  if (s.family != qca_family::zp_alpha || s.l != 1)
    throw usage_error("--family: order certificates exist for 3f and for zp in dimension 3");
  auto c = zp_order_certificate(s.d, s.k);
  auto r = check_certificate(c);
  if (out.format == "json") return {r.ok ? 0 : 1, to_json(c).dump(2) + "\n"};
  std::string t = "order " + std::to_string(c.claimed_order) + "; shift " + shift_text(c.shift) + "; ";
  t += c.two_copy ? "conjugator (a, b) = (" + std::to_string(c.a) + ", " + std::to_string(c.b) + "); "
                  : "conjugator a = " + std::to_string(c.a) + "; ";
  t += r.ok ? "certificate verified\n" : "certificate FAILED; " + mismatch_text(*r.failure) + "\n";
  return {r.ok ? 0 : 1, t};
}

result run_cup(const selector& sel, const output& out) {
  if (!sel.dim) throw usage_error("--dim is required");
  cup_spec s{sel.dim, sel.degree, sel.level};
  if (!s.valid()) throw usage_error("--p/--i: no cup matrix for this degree and level");
  if (!is_prime(sel.modulus)) throw usage_error("--modulus must be prime");
  auto m = cup_matrix(s, sel.modulus);
  if (out.format == "json") return {0, to_json(m).dump(2) + "\n"};
  return {0, to_text(m)};
}

result run_isa(const selector& sel, const output& out) {
  const int l = sel.l ? sel.l : 1;
  isa_kind kind;
  if (sel.kind == "z2") kind = isa_kind::z2;
  else if (sel.kind == "zp") kind = isa_kind::zp;
  else throw usage_error("--kind: expected z2 or zp, got " + sel.kind);
  if (kind == isa_kind::zp && !sel.p) throw usage_error("--p is required for --kind zp");
  auto r = build_isa_higher(kind, l, kind == isa_kind::z2 ? 2 : sel.p, sel.k);
  json j = to_json(r);
  bool ok = j["commuting"].get<bool>() && j["witness_inverts"].get<bool>();
  std::string text = std::string("ISA ") + (kind == isa_kind::z2 ? "z2" : "zp") + " dim " + std::to_string(r.D) +
                     " q " + std::to_string(r.q()) + "; <A, Abar> = 0: " + (j["commuting"].get<bool>() ? "yes" : "no") +
                     "; H H^-1 = H^-1 H = I: " + (j["witness_inverts"].get<bool>() ? "yes" : "no") + "\n";
  if (!sel.m.empty()) {
    if (kind != isa_kind::zp) throw usage_error("--m: induced QCAs come from --kind zp");
    laurent_poly m;
    try {
      m = parse_poly(sel.m, sel.p, r.D);
    } catch (const parse_error& e) {
      throw usage_error(std::string("--m: ") + e.what());
    }
    auto t = induced_qca(sel.p, sel.k, m, l);
    auto expect = times(-m, identity(2 * t.q(), sel.p, r.D));
    auto mm = compare("alpha_ISA^2", expect, compose(t, t).matrix());
    ok = ok && is_symplectic(t) && !mm;
    j["induced"] = to_json(t);
    j["induced_squares_to_minus_m"] = !mm;
    text += "induced QCA (m = " + to_string(m) + ", q " + std::to_string(t.q()) + "): square = -m I: " +
            (mm ? "NO; " + mismatch_text(*mm) : std::string("yes")) + "\n";
  }
  j["verified"] = ok;
  if (out.format == "json") return {ok ? 0 : 1, j.dump(2) + "\n"};
  return {ok ? 0 : 1, text};
}

result run_instantiate(const selector& sel, const output& out) {
  auto s = spec_of(sel);
  auto t = build(s);
  auto L = shape_of(sel, t.dim());
  auto e = instantiate(t, L);
  if (e.wrapped()) std::cerr << "warning: torus smaller than twice the locality radius; entries wrap\n";
  json j = {{"spec", to_json(s)}, {"L", L.lengths}, {"rows", e.rows()}, {"nonzeros", e.nonzeros()},
            {"locality_radius", locality_radius(t)}, {"wrapped", e.wrapped()}};
  bool symp = is_symplectic(e);
  bool comm = stabilizer_commutation(t, L);
  j["symplectic"] = symp;
  j["stabilizer_commutation"] = comm;
  bool ok = symp && comm;
  if (s.family == qca_family::three_fermion) {
    bool sq = is_identity(e * e);
    j["squares_to_identity"] = sq;
    ok = ok && sq;
  }
  j["verified"] = ok;
  if (out.format == "json") return {ok ? 0 : 1, j.dump(2) + "\n"};
  std::string text;
  for (auto& [k, v] : j.items())
    if (k != "spec") text += k + ": " + v.dump() + "\n";
  return {ok ? 0 : 1, text};
}

result run_export(const selector& sel, const output&) {
  auto s = spec_of(sel);
  auto t = build(s);
  auto e = instantiate(t, shape_of(sel, t.dim()));
  if (e.wrapped()) std::cerr << "warning: torus smaller than twice the locality radius; entries wrap\n";
  return {0, coordinate_list(e)};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Clifford QCA and invertible-subalgebra constructions over Laurent polynomial rings"};
  app.require_subcommand(1);
  selector sel;
  output out;

  auto add_output = [&](CLI::App* c) {
    c->add_option("--format", out.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    c->add_option("--output,-o", out.path, "write to this file instead of standard output");
  };
  auto add_family = [&](CLI::App* c) {
    c->add_option("--family", sel.family, "3f, zp or zp-beta");
    c->add_option("--dim", sel.dim, "spatial dimension");
    c->add_option("--l", sel.l, "degree index");
    c->add_option("--p", sel.p, "odd prime for Z_p families");
    c->add_option("--k", sel.k, "level, a unit mod p");
    add_output(c);
  };

  auto* construct = app.add_subcommand("construct", "print a QCA matrix");
  add_family(construct);
  auto* verify = app.add_subcommand("verify", "check symplecticity and family identities");
  add_family(verify);
  verify->add_flag("--all", sel.all, "run the built-in grid of families");
  verify->add_option("--input", sel.input, "JSON matrix to compare against the construction");
  auto* order = app.add_subcommand("order", "build and check an order certificate");
  add_family(order);
  auto* cup = app.add_subcommand("cup", "print a cup-product matrix");
  cup->add_option("--dim", sel.dim, "spatial dimension")->required();
  cup->add_option("--p", sel.degree, "degree of the second factor")->required();
  cup->add_option("--i", sel.level, "cup level")->required();
  cup->add_option("--modulus", sel.modulus, "prime modulus of the coefficients (default 7)");
  add_output(cup);
  auto* isa = app.add_subcommand("isa", "build an invertible subalgebra and its witnesses");
  isa->add_option("--kind", sel.kind, "z2 or zp");
  isa->add_option("--l", sel.l, "degree index");
  isa->add_option("--p", sel.p, "odd prime for --kind zp");
  isa->add_option("--k", sel.k, "level");
  isa->add_option("--m", sel.m, "monomial shift for the induced QCA, e.g. \"x^2 y\"");
  add_output(isa);
  auto* inst = app.add_subcommand("instantiate", "finite-torus checks");
  add_family(inst);
  inst->add_option("--L", sel.L, "torus lengths, e.g. 4,4,4")->delimiter(',');
  auto* exp = app.add_subcommand("export", "coordinate-list export of a finite-torus matrix");
  add_family(exp);
  exp->add_option("--L", sel.L, "torus lengths, e.g. 4,4,4")->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  result r;
  try {
    if (*construct) r = run_construct(sel, out);
    else if (*verify) r = run_verify(sel, out);
    else if (*order) r = run_order(sel, out);
    else if (*cup) r = run_cup(sel, out);
    else if (*isa) r = run_isa(sel, out);
    else if (*inst) r = run_instantiate(sel, out);
    else r = run_export(sel, out);
  } catch (const usage_error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const invalid_parameters& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  if (out.path.empty()) {
    std::cout << r.text;
  } else {
    std::ofstream f(out.path, std::ios::binary);
    if (!f) {
      std::cerr << "usage error: --output: cannot open " << out.path << "\n";
      return 2;
    }
    f << r.text;
  }
  return r.status;
}
