#include "joindet/join_algebra.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>
#include <utility>

namespace joindet {

namespace {

const ModPair kIdentityPair{};

void require_arity(int arity) {
  if (arity < 1) throw std::invalid_argument("join arity must be >= 1");
}

void require_strict_order(const Digraph& g, int arity) {
  require_arity(arity);
  if (g.order() < 2 * arity)
    throw std::invalid_argument("operation needs order >= " +
                                std::to_string(2 * arity) +
                                " (twice the join arity)");
}

}  // namespace

mpz_class decompose_join_det(const Digraph& g, const Digraph& h, int arity,
                             bool strict) {
  require_arity(arity);
  const int need = strict ? 2 * arity : arity;
  if (g.order() < need || h.order() < need)
    throw std::invalid_argument("join operands need order >= " +
                                std::to_string(need));
  mpz_class sum = 0;
  for (const ModPair& p : enumerate_pairs(arity)) {
    const mpz_class left = graph_det(apply_modification(g, kIdentityPair, p));
    if (left == 0) continue;
    const mpz_class right = graph_det(apply_modification(h, p, kIdentityPair));
    sum += pair_sign(p) * left * right;
  }
  return sum;
}

IntMatrix phi(const Digraph& g, int arity, int workers) {
  require_strict_order(g, arity);
  const std::vector<ModPair> table = enumerate_pairs(arity);
  const std::size_t k = table.size();
  IntMatrix out(k, k);
  const std::size_t jobs = k * k;
  const std::size_t threads = std::min<std::size_t>(
      std::max(workers, 1), std::min<std::size_t>(jobs, 64));
  if (threads <= 1) {
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t l = 0; l < k; ++l)
        out.at(i, l) = graph_det(apply_modification(g, table[i], table[l]));
    return out;
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t idx = next.fetch_add(1); idx < jobs;
         idx = next.fetch_add(1))
      out.at(idx / k, idx % k) =
          graph_det(apply_modification(g, table[idx / k], table[idx % k]));
  };
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (std::thread& t : pool) t.join();
  return out;
}

mpz_class join_det_via_phi(const Digraph& g, const Digraph& h, int arity) {
  return sandwich_product(phi(g, arity), build_sign_matrix(arity),
                          phi(h, arity))
      .at(0, 0);
}

mpz_class chain_det(const std::vector<Digraph>& graphs, int arity) {
  if (graphs.empty())
    throw std::invalid_argument("chain needs at least one graph");
  require_arity(arity);
  if (graphs.size() == 1) return graph_det(graphs.front());
  std::vector<std::pair<Digraph, IntMatrix>> memo;
  auto phi_of = [&](const Digraph& g) -> const IntMatrix& {
    for (const auto& [seen, mat] : memo)
      if (seen == g) return mat;
    memo.emplace_back(g, phi(g, arity));
    return memo.back().second;
  };
  const IntMatrix e = build_sign_matrix(arity);
  IntMatrix acc = phi_of(graphs.front());
  for (std::size_t i = 1; i < graphs.size(); ++i)
    acc = mat_mul(mat_mul(acc, e), phi_of(graphs[i]));
  return acc.at(0, 0);
}

mpz_class nfold_det(const Digraph& g, unsigned long long n, int arity) {
  return sandwich_power(phi(g, arity), build_sign_matrix(arity), n).at(0, 0);
}

IntMatrix phi_monoid(const Digraph& g, int arity) {
  return mat_mul(build_sign_matrix(arity), phi(g, arity));
}

bool equivalent(const Digraph& g, const Digraph& h, int arity) {
  return phi(g, arity) == phi(h, arity);
}

ClassLabel ClassLabel::n_class(const mpz_class& n) {
  if (n == 0) return zero();
  if (n == 1) return identity();
  return {Kind::NClass, n};
}

std::string ClassLabel::to_string() const {
  switch (kind) {
    case Kind::Identity:
      return "identity";
    case Kind::Zero:
      return "zero";
    case Kind::NClass:
      return "nclass(" + value.get_str() + ")";
    case Kind::Invertible:
      return value > 0 ? "invertible(+1)" : "invertible(-1)";
    case Kind::Other:
      return "other";
  }
  return "other";
}

ClassLabel classify(const Digraph& g, int arity) {
  const IntMatrix m = phi(g, arity);
  if (m.is_zero()) return ClassLabel::zero();
  const IntMatrix e = build_sign_matrix(arity);
  if (m == e) return ClassLabel::identity();
  const mpz_class n = m.at(0, 0);
  if (n > 1 && m == n * e) return ClassLabel::n_class(n);
  const mpz_class unit = det_exact(mat_mul(e, m));
  if (unit == 1 || unit == -1)
    return ClassLabel::invertible(unit > 0 ? 1 : -1);
  return ClassLabel::other();
}

Digraph make_identity(int arity) {
  require_arity(arity);
  const int base = arity % 2 == 1 ? 2 : 4;
  const int total = base + 2 * arity;
  Digraph g(total);
  g.add_undirected(arity + 1, arity + 2);
  if (base == 4) g.add_undirected(arity + 3, arity + 4);
  for (int i = 1; i <= arity; ++i) g.add_undirected(i, total + 1 - i);
  return g;
}

Digraph make_n_class(long n, int arity) {
  require_arity(arity);
  if (n < 0) throw std::invalid_argument("class index must be nonnegative");
  const int clique = static_cast<int>(n) + 1;
  const int extra = (n + arity) % 2 == 1 ? 2 : 0;
  const int total = 2 * arity + clique + extra;
  Digraph g(total);
  for (int u = arity + 1; u <= arity + clique; ++u)
    for (int v = u + 1; v <= arity + clique; ++v) g.add_undirected(u, v);
  if (extra) g.add_undirected(arity + clique + 1, arity + clique + 2);
  for (int i = 1; i <= arity; ++i) g.add_undirected(i, total + 1 - i);
  return g;
}

}  // namespace joindet
