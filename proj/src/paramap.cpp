#include "percy/paramap.hpp"

#include <iterator>

namespace percy {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b, r = a % b;
  return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}

}  // namespace

ParaMap para_map(int src, int dst, std::vector<std::int64_t> values) {
  if (src < 0 || dst < 0) throw error("para_map: negative object index");
  if (static_cast<int>(values.size()) != src + 1)
    throw error("para_map: expected " + std::to_string(src + 1) + " values");
  for (int i = 0; i < src; ++i)
    if (values[i] > values[i + 1]) throw error("para_map: values not weakly monotone");
  if (values[src] > values[0] + dst + 1)
    throw error("para_map: period bound f(src) <= f(0) + dst + 1 violated");
  return ParaMap{src, dst, std::move(values)};
}

ParaMap para_identity(int n) {
  std::vector<std::int64_t> v(n + 1);
  for (int i = 0; i <= n; ++i) v[i] = i;
  return ParaMap{n, n, std::move(v)};
}

std::int64_t eval_at(const ParaMap& f, std::int64_t i) {
  std::int64_t period = f.src + 1;
  std::int64_t q = floor_div(i, period);
  std::int64_t r = i - q * period;
  return f.values[static_cast<std::size_t>(r)] + q * (f.dst + 1);
}

ParaMap compose(const ParaMap& g, const ParaMap& f) {
  if (f.dst != g.src) throw error("compose: object mismatch");
  std::vector<std::int64_t> v(f.src + 1);
  for (int i = 0; i <= f.src; ++i) v[i] = eval_at(g, f.values[i]);
  return para_map(f.src, g.dst, std::move(v));
}

ParaMap delta(int n, int i) {
  if (n < 1 || i < 0 || i > n) throw error("delta: index out of range");
  std::vector<std::int64_t> v(n);
  for (int k = 0; k < n; ++k) v[k] = k < i ? k : k + 1;
  return ParaMap{n - 1, n, std::move(v)};
}

ParaMap sigma(int n, int j) {
  if (n < 0 || j < 0 || j > n) throw error("sigma: index out of range");
  std::vector<std::int64_t> v(n + 2);
  for (int k = 0; k <= n + 1; ++k) v[k] = k <= j ? k : k - 1;
  return ParaMap{n + 1, n, std::move(v)};
}

ParaMap tau(int n) { return tau_pow(n, 1); }
ParaMap tau_inv(int n) { return tau_pow(n, -1); }

ParaMap tau_pow(int n, std::int64_t k) {
  if (n < 0) throw error("tau: index out of range");
  std::vector<std::int64_t> v(n + 1);
  for (int i = 0; i <= n; ++i) v[i] = i + k;
  return ParaMap{n, n, std::move(v)};
}

bool membership(const ParaMap& f, CatFlavor flavor) {
  auto gaps_at_most_one = [&f]() {
    for (int i = 0; i < f.src; ++i)
      if (f.values[i + 1] - f.values[i] > 1) return false;
    return f.values[0] + f.dst + 1 - f.values[f.src] <= 1;
  };
  switch (flavor) {
    case CatFlavor::Delta:
      return f.values[0] >= 0 && f.values[f.src] <= f.dst;
    case CatFlavor::DeltaSurj:
      return membership(f, CatFlavor::Delta) && gaps_at_most_one();
    case CatFlavor::LambdaInfinity:
      return true;
    case CatFlavor::LambdaInfinitySurj:
      return gaps_at_most_one();
    case CatFlavor::Xi:
      return f.values[0] >= 0;
    case CatFlavor::Lambda:
      return f.values[0] >= 0 && f.values[0] <= f.dst;
  }
  return false;
}

ParaMap letter_map(const Letter& l) {
  switch (l.kind) {
    case Letter::Kind::Delta: return delta(l.n, l.i);
    case Letter::Kind::Sigma: return sigma(l.n, l.i);
    case Letter::Kind::Tau: return tau(l.n);
    case Letter::Kind::TauInv: return tau_inv(l.n);
  }
  throw error("letter_map: bad kind");
}

ParaMap evaluate_word(const std::vector<Letter>& w, int identity_object) {
  if (w.empty()) {
    if (identity_object < 0) throw error("evaluate_word: empty word needs an object");
    return para_identity(identity_object);
  }
  ParaMap acc = letter_map(w.back());
  for (auto it = std::next(w.rbegin()); it != w.rend(); ++it)
    acc = compose(letter_map(*it), acc);
  return acc;
}

std::vector<Letter> factorize(const ParaMap& f) {
  std::vector<Letter> tail;  // collected right-to-left
  ParaMap cur = f;

  // Peel surjective letters from the right until cur is injective on one
  // period with no wrap repeat.
  for (;;) {
    int m = cur.src;
    int repeat = -1;
    for (int i = 0; i < m; ++i)
      if (cur.values[i] == cur.values[i + 1]) {
        repeat = i;
        break;
      }
    if (repeat >= 0) {
      // cur = cur' o sigma_repeat with the duplicate value dropped
      tail.push_back(Letter{Letter::Kind::Sigma, m - 1, repeat});
      std::vector<std::int64_t> v;
      v.reserve(m);
      for (int i = 0; i <= m; ++i)
        if (i != repeat + 1) v.push_back(cur.values[i]);
      cur = para_map(m - 1, cur.dst, std::move(v));
      continue;
    }
    if (m > 0 && cur.values[m] == cur.values[0] + cur.dst + 1) {
      // wrap repeat: conjugate by tau so it becomes an adjacent repeat
      tail.push_back(Letter{Letter::Kind::Tau, m, 0});
      std::vector<std::int64_t> v(m + 1);
      for (int i = 0; i <= m; ++i) v[i] = eval_at(cur, i - 1);
      cur = para_map(m, cur.dst, std::move(v));
      continue;
    }
    break;
  }

  // cur is now strictly monotone with window < dst+1: tau^k o (delta word).
  std::vector<Letter> word;
  std::int64_t k = cur.values[0];
  for (std::int64_t s = 0; s < (k >= 0 ? k : -k); ++s)
    word.push_back(Letter{k >= 0 ? Letter::Kind::Tau : Letter::Kind::TauInv, cur.dst, 0});

  std::vector<std::int64_t> g(cur.values);
  for (auto& x : g) x -= k;  // g(0) = 0, values in [0, dst]
  int n = cur.dst;
  while (n > cur.src) {
    // remove the largest missing value
    int missing = -1;
    std::vector<bool> hit(n + 1, false);
    for (auto x : g) hit[static_cast<std::size_t>(x)] = true;
    for (int v = n; v >= 0; --v)
      if (!hit[v]) {
        missing = v;
        break;
      }
    word.push_back(Letter{Letter::Kind::Delta, n, missing});
    for (auto& x : g)
      if (x > missing) --x;
    --n;
  }

  word.insert(word.end(), tail.rbegin(), tail.rend());
  return word;
}

LambdaProjection project_to_lambda(const ParaMap& f) {
  std::int64_t period = f.dst + 1;
  std::int64_t w = floor_div(f.values[0], period);
  std::vector<std::int64_t> v(f.values);
  for (auto& x : v) x -= w * period;
  return {para_map(f.src, f.dst, std::move(v)), w};
}

ParaMap dual(const ParaMap& f) {
  std::vector<std::int64_t> v(f.dst + 1);
  for (int j = 0; j <= f.dst; ++j) {
    std::int64_t i = 0;
    while (eval_at(f, i) >= j) --i;
    while (eval_at(f, i) < j) ++i;
    v[j] = i;
  }
  return para_map(f.dst, f.src, std::move(v));
}

std::string to_string(const ParaMap& f) {
  std::string s = "<" + std::to_string(f.src) + ">-><" + std::to_string(f.dst) + ">:(";
  for (int i = 0; i <= f.src; ++i) {
    if (i) s += ",";
    s += std::to_string(f.values[i]);
  }
  return s + ")";
}

}  // namespace percy
