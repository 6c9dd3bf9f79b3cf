#pragma once

#include <vector>

#include "kempner/bigint.hpp"

namespace kempner {

/// STANDARD is the ordinary base-p positional system with node values p^n.
/// GENERALIZED is the system over nodes a_n(p) = (p^n - 1)/(p - 1), which
/// satisfy a_{n+1} = p*a_n + 1; digits come from the greedy expansion and a
/// digit may reach p (only in the lowest nonzero position).
enum class ScaleKind { STANDARD, GENERALIZED };

/// Digits least-significant first; empty represents 0.
struct DigitString {
  u64 base_prime;
  ScaleKind kind;
  std::vector<u64> digits;
};

/// n-th node value: p^n for STANDARD, (p^n - 1)/(p - 1) for GENERALIZED.
u64 scale_node(u64 p, u32 n, ScaleKind kind);

DigitString digits_of(u64 alpha, u64 p, ScaleKind kind);

u64 digit_sum(u64 alpha, u64 p, ScaleKind kind);

/// Reinterprets a GENERALIZED digit string positionally in the standard
/// scale: sum of d_i * p^(i-1).
u64 read_in_standard(const DigitString& d);

/// Evaluates a digit string against its own scale's nodes.
u64 reconstruct(const DigitString& d);

}  // namespace kempner
