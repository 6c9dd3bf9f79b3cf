#include "kempner/scales.hpp"

#include <stdexcept>

#include "kempner/prime_table.hpp"

namespace kempner {

namespace {

void require_prime(u64 p) {
  if (!is_prime(p)) throw std::invalid_argument("scale base must be prime");
}

// Nodes a_1, a_2, ... not exceeding alpha (at least a_1 = 1 for the
// generalized scale, p^0 = 1 for the standard one).
std::vector<u64> nodes_upto(u64 alpha, u64 p, ScaleKind kind) {
  std::vector<u64> nodes;
  u64 node = 1;
  while (node <= alpha) {
    nodes.push_back(node);
    if (node > (alpha - (kind == ScaleKind::GENERALIZED ? 1u : 0u)) / p) break;
    node = kind == ScaleKind::GENERALIZED ? p * node + 1 : p * node;
  }
  return nodes;
}

}  // namespace

u64 scale_node(u64 p, u32 n, ScaleKind kind) {
  require_prime(p);
  if (n == 0) throw std::invalid_argument("scale_node: n is 1-based");
  if (kind == ScaleKind::STANDARD) return checked_pow(p, n);
  u64 node = 1;
  for (u32 i = 1; i < n; ++i) node = checked_add(checked_mul(p, node), 1);
  return node;
}

DigitString digits_of(u64 alpha, u64 p, ScaleKind kind) {
  require_prime(p);
  DigitString d{p, kind, {}};
  if (alpha == 0) return d;
  std::vector<u64> nodes = nodes_upto(alpha, p, kind);
  d.digits.assign(nodes.size(), 0);
  u64 rem = alpha;
  for (std::size_t i = nodes.size(); i-- > 0;) {
    d.digits[i] = rem / nodes[i];
    rem %= nodes[i];
  }
  if (rem != 0) throw std::logic_error("digit expansion did not terminate");
  while (!d.digits.empty() && d.digits.back() == 0) d.digits.pop_back();
  return d;
}

u64 digit_sum(u64 alpha, u64 p, ScaleKind kind) {
  DigitString d = digits_of(alpha, p, kind);
  u64 s = 0;
  for (u64 dig : d.digits) s += dig;
  return s;
}

u64 read_in_standard(const DigitString& d) {
  if (d.kind != ScaleKind::GENERALIZED)
    throw std::invalid_argument("read_in_standard expects generalized digits");
  u64 v = 0;
  for (std::size_t i = d.digits.size(); i-- > 0;)
    v = checked_add(checked_mul(v, d.base_prime), d.digits[i]);
  return v;
}

u64 reconstruct(const DigitString& d) {
  u64 v = 0;
  u64 node = 1;
  for (std::size_t i = 0; i < d.digits.size(); ++i) {
    v = checked_add(v, checked_mul(d.digits[i], node));
    if (i + 1 < d.digits.size())
      node = d.kind == ScaleKind::GENERALIZED
                 ? checked_add(checked_mul(d.base_prime, node), 1)
                 : checked_mul(d.base_prime, node);
  }
  return v;
}

}  // namespace kempner
