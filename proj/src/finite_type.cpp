#include <cstdlib>
#include <deque>
#include <set>

#include "domfan/error.hpp"
#include "domfan/exchange_matrix.hpp"

namespace domfan {

namespace {

// Every matrix in a finite-type mutation class has |b_ij b_ji| <= 3.
bool violates_two_finiteness(const ExchangeMatrix& b) {
  for (size_t i = 0; i < b.rank(); ++i)
    for (size_t j = i + 1; j < b.rank(); ++j)
      if (std::abs(b(i, j) * b(j, i)) > 3) return true;
  return false;
}

}  // namespace

FiniteTypeReport classify_finite_type(const ExchangeMatrix& b, size_t budget) {
  if (is_acyclic(b)) {
    bool fin = cartan(b).is_finite_type();
    return {fin, 1, fin ? "acyclic with positive-definite Cartan companion"
                        : "acyclic with Cartan companion not positive definite"};
  }
  std::set<ExchangeMatrix> seen{canonical_form(b)};
  std::deque<ExchangeMatrix> queue{b};
  while (!queue.empty()) {
    ExchangeMatrix cur = std::move(queue.front());
    queue.pop_front();
    if (violates_two_finiteness(cur))
      return {false, seen.size(), "mutation class contains a pair with |b_ij b_ji| > 3"};
    if (is_acyclic(cur)) {
      bool fin = cartan(cur).is_finite_type();
      return {fin, seen.size(),
              fin ? "mutation-equivalent to an acyclic matrix with positive-definite Cartan companion"
                  : "mutation-equivalent to an acyclic matrix of infinite type"};
    }
    for (size_t k = 0; k < cur.rank(); ++k) {
      ExchangeMatrix next = mutate(cur, k);
      if (!seen.insert(canonical_form(next)).second) continue;
      if (seen.size() > budget)
        throw Undecided("finite-type search exhausted its budget of " + std::to_string(budget) +
                        " matrices");
      queue.push_back(std::move(next));
    }
  }
  // A finite-type class always has an acyclic member.
  return {false, seen.size(), "finite mutation class without an acyclic member"};
}

bool is_finite_type(const ExchangeMatrix& b, size_t budget) {
  return classify_finite_type(b, budget).finite;
}

}  // namespace domfan
