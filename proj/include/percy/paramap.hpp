#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "percy/rational.hpp"

namespace percy {

// Morphism <src> -> <dst> of the paracyclic category, stored as the values
// f(0..src) of a weakly monotone map with periodic extension
// f(i + src + 1) = f(i) + dst + 1. Monotonicity of the extension is the
// window bound f(src) <= f(0) + dst + 1.
struct ParaMap {
  int src = 0;
  int dst = 0;
  std::vector<std::int64_t> values;

  bool operator==(const ParaMap&) const = default;
};

enum class CatFlavor { Delta, DeltaSurj, LambdaInfinity, LambdaInfinitySurj, Xi, Lambda };

ParaMap para_map(int src, int dst, std::vector<std::int64_t> values);
ParaMap para_identity(int n);

// Periodic extension at an arbitrary integer argument.
std::int64_t eval_at(const ParaMap& f, std::int64_t i);

// (g o f)(i) = g^(f(i)); throws on object mismatch.
ParaMap compose(const ParaMap& g, const ParaMap& f);

// Generators: delta_i skips the value i, sigma_j repeats the value j,
// tau_n shifts by +1 and tau_n^{-1} by -1.
ParaMap delta(int n, int i);    // <n-1> -> <n>, 0 <= i <= n, n >= 1
ParaMap sigma(int n, int j);    // <n+1> -> <n>, 0 <= j <= n, n >= 0
ParaMap tau(int n);             // <n> -> <n>
ParaMap tau_inv(int n);         // <n> -> <n>
ParaMap tau_pow(int n, std::int64_t k);

// Membership is decided on the normal form:
//   Delta        0 <= f(0) and f(src) <= dst
//   Xi           0 <= f(0)
//   *Surj        every gap, including the wrap gap f(0)+dst+1-f(src), is <= 1
//   Lambda       the canonical coset representative window f(0) in [0, dst]
bool membership(const ParaMap& f, CatFlavor flavor);

struct Letter {
  enum class Kind { Delta, Sigma, Tau, TauInv } kind;
  int n;  // the <n> carried by the generator as written above
  int i;  // index for delta/sigma, unused for tau
};

// A word w with evaluate_word(w) = f; letters compose left to right as
// w[0] o w[1] o ... o w[r-1] (w[0] applied last).
std::vector<Letter> factorize(const ParaMap& f);
ParaMap letter_map(const Letter& l);
// The empty word is the identity of <identity_object>.
ParaMap evaluate_word(const std::vector<Letter>& w, int identity_object = -1);

// Unique decomposition f = tau_dst^{(dst+1) * winding} o rep with
// rep(0) in [0, dst].
struct LambdaProjection {
  ParaMap rep;
  std::int64_t winding;
};
LambdaProjection project_to_lambda(const ParaMap& f);

// Galois dual f^(j) = min{ i : f^(i) >= j }; contravariant, and
// (f^)^(i) = f^(i-1) + 1.
ParaMap dual(const ParaMap& f);

std::string to_string(const ParaMap& f);

}  // namespace percy
