#include "asurj/zspec.hpp"

#include <sstream>
#include <stdexcept>

#include "asurj/parse.hpp"

namespace asurj {

int ZSpec::max_w_degree() const {
  int d = 0;
  for (const MultiPoly& q : w_polys)
    if (auto qd = q.total_degree()) d = std::max(d, *qd);
  return d;
}

void ZSpec::canonicalize(std::vector<std::string>* notes) {
  if (n < 2) throw std::invalid_argument("ZSpec: dimension n must be at least 2");
  if (!points.empty()) {
    const size_t dim = points.front().size();
    if (dim != 2 && dim != static_cast<size_t>(n))
      throw std::invalid_argument("ZSpec: points must live in the plane or in A^n");
    for (const auto& p : points)
      if (p.size() != dim)
        throw std::invalid_argument("ZSpec: points must all have the same dimension");
    // Z is a set: drop exact duplicates, first occurrence wins
    std::vector<std::vector<Rational>> unique;
    for (const auto& p : points) {
      bool dup = false;
      for (const auto& u : unique)
        if (u == p) {
          dup = true;
          break;
        }
      if (dup) {
        if (notes) notes->push_back("duplicate point dropped: " + format_point(p));
        continue;
      }
      unique.push_back(p);
    }
    points = std::move(unique);
  }
  if (n == 2 && !w_polys.empty())
    throw std::invalid_argument("ZSpec: n = 2 leaves no room for W polynomials (m must be 0)");
  for (const MultiPoly& q : w_polys) {
    if (q.num_vars() != n)
      throw std::invalid_argument("ZSpec: W polynomials must live in the n-variable ring");
    if (!q.uses_only_variables_at_least(3))
      throw std::invalid_argument("ZSpec: W polynomials may only use variables z3..zn");
  }
}

}  // namespace asurj
