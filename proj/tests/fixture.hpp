#pragma once

#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>

#include <cqca/matrix.hpp>

// Loader for matrices transcribed into tests/fixtures/reference_matrices.txt.
// Entries are sums of terms "+a/b*k^e*x^n*...", evaluated mod d at level k.
namespace fixture {

struct raw {
  std::size_t rows = 0, cols = 0;
  std::string vars;
  std::vector<std::vector<std::string>> cells;
};

inline std::string trim(const std::string& s) {
  auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

inline const std::map<std::string, raw>& all() {
  static const std::map<std::string, raw> table = [] {
    std::map<std::string, raw> t;
    std::ifstream in(std::string(CQCA_FIXTURES) + "/reference_matrices.txt");
    if (!in) throw std::runtime_error("cannot open fixture file");
    std::string line;
    while (std::getline(in, line)) {
      if (line.rfind("begin ", 0) != 0) continue;
      std::istringstream hs(line.substr(6));
      std::string name;
      raw r;
      hs >> name >> r.rows >> r.cols >> r.vars;
      while (std::getline(in, line) && line != "end") {
        std::vector<std::string> row;
        std::size_t pos = 0;
        while (true) {
          auto bar = line.find(" | ", pos);
          row.push_back(trim(line.substr(pos, bar == std::string::npos ? std::string::npos : bar - pos)));
          if (bar == std::string::npos) break;
          pos = bar + 3;
        }
        if (row.size() != r.cols) throw std::runtime_error("fixture " + name + ": bad column count");
        r.cells.push_back(row);
      }
      if (r.cells.size() != r.rows) throw std::runtime_error("fixture " + name + ": bad row count");
      t[name] = r;
    }
    return t;
  }();
  return table;
}

inline long long pow_mod(long long b, long long e, std::uint32_t d) {
  long long r = 1;
  b = cqca::residue(b, d);
  while (e > 0) {
    if (e & 1) r = r * b % d;
    b = b * b % d;
    e >>= 1;
  }
  return r;
}

inline cqca::laurent_poly parse_entry(const std::string& text, const std::string& vars, std::uint32_t d, long long k) {
  const int D = static_cast<int>(vars.size());
  cqca::laurent_poly out = cqca::laurent_poly::zero(d, D);
  std::istringstream ts(text);
  std::string term;
  while (ts >> term) {
    if (term == "0") continue;
    long long sign = term[0] == '-' ? -1 : 1;
    std::size_t star = term.find('*');
    std::string coef = term.substr(1, star == std::string::npos ? std::string::npos : star - 1);
    long long num = 1, den = 1;
    if (auto sl = coef.find('/'); sl != std::string::npos) {
      num = std::stoll(coef.substr(0, sl));
      den = std::stoll(coef.substr(sl + 1));
    } else {
      num = std::stoll(coef);
    }
    long long c = cqca::residue(sign * num, d) * cqca::mod_inverse(den, d) % d;
    cqca::monomial m;
    while (star != std::string::npos) {
      std::size_t next = term.find('*', star + 1);
      std::string f = term.substr(star + 1, next == std::string::npos ? std::string::npos : next - star - 1);
      auto caret = f.find('^');
      int e = caret == std::string::npos ? 1 : std::stoi(f.substr(caret + 1));
      char v = f[0];
      if (v == 'k') {
        long long kk = e >= 0 ? pow_mod(k, e, d) : pow_mod(cqca::mod_inverse(k, d), -e, d);
        c = c * kk % d;
      } else {
        auto idx = vars.find(v);
        if (idx == std::string::npos) throw std::runtime_error("unknown variable in fixture");
        m.e[idx] += e;
      }
      star = next;
    }
    out += cqca::laurent_poly(d, D, c, m);
  }
  return out;
}

inline cqca::poly_matrix load(const std::string& name, std::uint32_t d = 2, long long k = 1) {
  const raw& r = all().at(name);
  cqca::poly_matrix m = cqca::zeros(r.rows, r.cols, d, static_cast<int>(r.vars.size()));
  for (std::size_t i = 0; i < r.rows; ++i)
    for (std::size_t j = 0; j < r.cols; ++j) m(i, j) = parse_entry(r.cells[i][j], r.vars, d, k);
  return m;
}

}  // namespace fixture
