#include "tribo/numeration.hpp"

#include <algorithm>

#include "tribo/errors.hpp"

namespace tribo {

namespace {

// Cached basis values from index 2 upward; grown on demand.
// Thread-local: values are append-only and never shared across threads.
std::vector<Nat>& basis_cache(NumerationSystem system) {
  thread_local std::vector<Nat> fib;
  thread_local std::vector<Nat> trib;
  std::vector<Nat>& cache = system == NumerationSystem::Fibonacci ? fib : trib;
  if (cache.empty()) {
    if (system == NumerationSystem::Fibonacci) {
      cache = {Nat(1), Nat(2)};  // F2, F3
    } else {
      cache = {Nat(1), Nat(2), Nat(4)};  // T2, T3, T4
    }
  }
  return cache;
}

// Ensures the cache holds basis values through index `i` (i >= 2); returns it.
const std::vector<Nat>& basis_through(NumerationSystem system, std::size_t i) {
  std::vector<Nat>& cache = basis_cache(system);
  while (cache.size() < i - 1) {
    std::size_t s = cache.size();
    if (system == NumerationSystem::Fibonacci) {
      cache.push_back(cache[s - 1] + cache[s - 2]);
    } else {
      cache.push_back(cache[s - 1] + cache[s - 2] + cache[s - 3]);
    }
  }
  return cache;
}

bool has_forbidden_factor(const DigitWord& w) {
  const std::size_t need =
      w.system == NumerationSystem::Fibonacci ? 2 : 3;  // "11" / "111"
  std::size_t run = 0;
  for (std::uint8_t d : w.digits) {
    run = d ? run + 1 : 0;
    if (run >= need) return true;
  }
  return false;
}

}  // namespace

std::string DigitWord::str() const {
  std::string s;
  s.reserve(digits.size());
  for (std::uint8_t d : digits) s.push_back(d ? '1' : '0');
  return s;
}

std::string PairWord::str() const {
  std::string a, b;
  a.reserve(symbols.size());
  b.reserve(symbols.size());
  for (const auto& [x, y] : symbols) {
    a.push_back(x ? '1' : '0');
    b.push_back(y ? '1' : '0');
  }
  return a + ":" + b;
}

Nat basis_term(NumerationSystem system, unsigned long i) {
  // F0=0, F1=1 / T0=0, T1=1, T2=1; the cache starts at index 2.
  if (i == 0) return Nat(0);
  if (i == 1) return Nat(1);
  const std::vector<Nat>& cache = basis_through(system, i);
  return cache[i - 2];
}

DigitWord encode(NumerationSystem system, const Nat& n) {
  if (n < 0) throw DomainError("encode: negative argument");
  DigitWord w;
  w.system = system;
  if (n == 0) return w;

  std::vector<Nat>& cache = basis_cache(system);
  while (cache.back() <= n) {
    std::size_t s = cache.size();
    if (system == NumerationSystem::Fibonacci) {
      cache.push_back(cache[s - 1] + cache[s - 2]);
    } else {
      cache.push_back(cache[s - 1] + cache[s - 2] + cache[s - 3]);
    }
  }
  // Largest basis index with value <= n (greedy leading term).
  std::size_t top = cache.size() - 1;
  while (cache[top] > n) --top;

  Nat rest(n);
  w.digits.assign(top + 1, 0);
  for (std::size_t pos = top + 1; pos-- > 0;) {
    if (cache[pos] <= rest) {
      w.digits[top - pos] = 1;
      rest -= cache[pos];
    }
  }
  return w;
}

Nat decode(const DigitWord& w) {
  if (has_forbidden_factor(w)) {
    throw InvalidWord("decode: forbidden factor in \"" + w.str() + "\"");
  }
  if (w.empty()) return Nat(0);
  // Accumulate from the lsd with rolling basis values; weight of the digit
  // at left-position p is basis(L + 1 - p).
  Nat total(0);
  Nat w_prev2(0), w_prev1(1), w_prev0(1);  // basis(0), basis(1), basis(2)
  bool fib = w.system == NumerationSystem::Fibonacci;
  for (std::size_t k = 0; k < w.size(); ++k) {
    std::uint8_t d = w.digits[w.size() - 1 - k];
    if (d) total += w_prev0;
    Nat next = fib ? Nat(w_prev0 + w_prev1) : Nat(w_prev0 + w_prev1 + w_prev2);
    w_prev2 = w_prev1;
    w_prev1 = w_prev0;
    w_prev0 = next;
  }
  return total;
}

bool is_valid(const DigitWord& w) { return !has_forbidden_factor(w); }

PairWord pair_align(const DigitWord& w1, const DigitWord& w2) {
  if (w1.system != w2.system) {
    throw DomainError("pair_align: mixed numeration systems");
  }
  PairWord p;
  p.system = w1.system;
  std::size_t len = std::max(w1.size(), w2.size());
  p.symbols.reserve(len);
  std::size_t pad1 = len - w1.size();
  std::size_t pad2 = len - w2.size();
  for (std::size_t i = 0; i < len; ++i) {
    std::uint8_t a = i < pad1 ? 0 : w1.digits[i - pad1];
    std::uint8_t b = i < pad2 ? 0 : w2.digits[i - pad2];
    p.symbols.emplace_back(a, b);
  }
  return p;
}

Nat least_term(NumerationSystem system, const Nat& n) {
  if (n < 1) throw DomainError("least_term: requires n >= 1");
  DigitWord w = encode(system, n);
  std::size_t low = w.size();  // position of lowest set digit from the left
  while (low > 0 && w.digits[low - 1] == 0) --low;
  // Digit at left-position low-1 has basis index (L + 1) - (low - 1).
  return basis_term(system, static_cast<unsigned long>(w.size() + 2 - low));
}

DigitWord word_from_string(std::string_view s, NumerationSystem system) {
  DigitWord w;
  w.system = system;
  w.digits.reserve(s.size());
  for (char c : s) {
    if (c != '0' && c != '1') {
      throw DomainError("word_from_string: digit must be 0 or 1");
    }
    w.digits.push_back(c == '1' ? 1 : 0);
  }
  return w;
}

}  // namespace tribo
