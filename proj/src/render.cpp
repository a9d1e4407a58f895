#include "render.hpp"

#include <map>
#include <sstream>

#include <json.hpp>

namespace rcanon {

namespace {

struct DummyKey {
  IndexKind kind;
  long value;
  std::string name;
  bool operator<(const DummyKey& o) const {
    if (kind != o.kind) return kind < o.kind;
    if (value != o.value) return value < o.value;
    return name < o.name;
  }
};

// Rows for one term: recorded for frees, first-upper/second-lower for dummies.
std::vector<Row> term_rows(const RMonomial& m) {
  std::vector<Row> rows;
  std::map<DummyKey, int> seen;
  for (const auto& f : m.factors)
    for (const auto& ix : f.slots) {
      if (ix.is_free()) {
        rows.push_back(ix.row);
      } else {
        int n = seen[{ix.kind, ix.value, ix.name}]++;
        rows.push_back(n == 0 ? Row::Upper : Row::Lower);
      }
    }
  return rows;
}

void render_term_text(std::ostringstream& out, const RMonomial& m, bool leading) {
  Rational c = m.coeff;
  bool negative = sgn(c) < 0;
  if (negative) c = -c;
  if (leading) {
    if (negative) out << "-";
  } else {
    out << (negative ? " - " : " + ");
  }
  if (!(c == Rational(1))) out << to_string(c) << " * ";
  std::vector<Row> rows = term_rows(m);
  std::size_t k = 0;
  for (std::size_t fi = 0; fi < m.factors.size(); ++fi) {
    if (fi > 0) out << " * ";
    const auto& f = m.factors[fi];
    out << "R(";
    for (int s = 0; s < 4; ++s) {
      if (s == 2)
        out << ", ";
      else if (s == 1 || s == 3)
        out << " ";
      out << (rows[k++] == Row::Upper ? "^" : "_") << index_text(f.slots[s]);
    }
    out << ")";
  }
}

}  // namespace

std::string render_expression(const RPolynomial& p, RenderFormat fmt) {
  if (fmt == RenderFormat::Text) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    for (std::size_t i = 0; i < p.terms.size(); ++i) render_term_text(out, p.terms[i], i == 0);
    return out.str();
  }

  nlohmann::ordered_json root;
  root["terms"] = nlohmann::ordered_json::array();
  for (const auto& t : p.terms) {
    nlohmann::ordered_json jt;
    jt["coeff"] = to_string(t.coeff);
    auto factors = nlohmann::ordered_json::array();
    std::vector<Row> rows = term_rows(t);
    std::size_t k = 0;
    for (const auto& f : t.factors) {
      auto jf = nlohmann::ordered_json::array();
      for (int s = 0; s < 4; ++s) {
        nlohmann::ordered_json ji;
        ji["n"] = index_text(f.slots[s]);
        ji["r"] = rows[k++] == Row::Upper ? "u" : "l";
        jf.push_back(ji);
      }
      factors.push_back(jf);
    }
    jt["factors"] = factors;
    root["terms"].push_back(jt);
  }
  return root.dump();
}

std::string monic_text(const RMonomial& m) {
  RPolynomial p;
  p.terms.push_back(m.monic());
  return render_expression(p, RenderFormat::Text);
}

}  // namespace rcanon
