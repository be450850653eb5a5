#include "jetfol/multi_index.hpp"

#include <numeric>
#include <stdexcept>

namespace jetfol {

MultiIndex::MultiIndex(std::vector<int> exps) : exps_(std::move(exps)) {
  if (exps_.empty()) throw std::invalid_argument("multi-index needs at least one variable");
  for (int e : exps_)
    if (e < 0) throw std::invalid_argument("negative exponent in multi-index");
  weight_ = std::accumulate(exps_.begin(), exps_.end(), 0);
}

MultiIndex MultiIndex::zero(int l) { return MultiIndex(std::vector<int>(static_cast<std::size_t>(l), 0)); }

MultiIndex MultiIndex::unit(int l, int i) {
  std::vector<int> e(static_cast<std::size_t>(l), 0);
  e.at(static_cast<std::size_t>(i)) = 1;
  return MultiIndex(std::move(e));
}

MultiIndex MultiIndex::operator+(const MultiIndex& o) const {
  if (o.size() != size()) throw std::invalid_argument("multi-index size mismatch");
  std::vector<int> e(exps_);
  for (std::size_t i = 0; i < e.size(); ++i) e[i] += o.exps_[i];
  return MultiIndex(std::move(e));
}

std::string MultiIndex::str() const {
  if (weight_ == 0) return "1";
  std::string out;
  for (int i = 0; i < size(); ++i) {
    int e = exps_[static_cast<std::size_t>(i)];
    if (e == 0) continue;
    if (!out.empty()) out += "*";
    out += size() == 1 ? std::string("t") : "x" + std::to_string(i + 1);
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

namespace {

void fill(int l, int pos, int remaining, std::vector<int>& cur, std::vector<MultiIndex>& out) {
  if (pos == l - 1) {
    cur[static_cast<std::size_t>(pos)] = remaining;
    out.emplace_back(cur);
    return;
  }
  for (int e = 0; e <= remaining; ++e) {
    cur[static_cast<std::size_t>(pos)] = e;
    fill(l, pos + 1, remaining - e, cur, out);
  }
}

}  // namespace

std::vector<MultiIndex> monomials_of_degree(int l, int degree) {
  if (l < 1) throw std::invalid_argument("codimension must be at least 1");
  if (degree < 0) return {};
  std::vector<MultiIndex> out;
  std::vector<int> cur(static_cast<std::size_t>(l), 0);
  fill(l, 0, degree, cur, out);
  return out;
}

std::vector<Term> module_basis(int l, int degree) {
  std::vector<Term> out;
  auto monos = monomials_of_degree(l, degree);
  for (int i = 0; i < l; ++i)
    for (const auto& m : monos) out.push_back(Term{i, m});
  return out;
}

}  // namespace jetfol
