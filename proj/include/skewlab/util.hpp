#pragma once

#include <atomic>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace skewlab {

// Raised when an operation's mathematical hypotheses are not met (as opposed
// to malformed input).  Callers distinguish "not applicable" from "wrong".
class refused_error : public std::runtime_error {
 public:
  explicit refused_error(const std::string& what) : std::runtime_error(what) {}
};

inline int64_t gcd_i64(int64_t a, int64_t b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    int64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// a^e mod m, exact for m < 2^31.
inline int64_t pow_mod_i64(int64_t a, int64_t e, int64_t m) {
  if (m <= 0) throw std::invalid_argument("pow_mod: modulus must be positive");
  a %= m;
  if (a < 0) a += m;
  int64_t r = 1 % m;
  while (e > 0) {
    if (e & 1) r = (r * a) % m;
    a = (a * a) % m;
    e >>= 1;
  }
  return r;
}

// a^e with overflow check; throws if the result would exceed 2^62.
inline int64_t pow_checked_i64(int64_t a, int64_t e) {
  int64_t r = 1;
  const int64_t limit = int64_t(1) << 62;
  for (int64_t i = 0; i < e; ++i) {
    if (a != 0 && r > limit / a) throw std::overflow_error("pow_checked: overflow");
    r *= a;
  }
  return r;
}

inline bool is_prime_i64(int64_t n) {
  if (n < 2) return false;
  for (int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline int64_t inv_mod_i64(int64_t a, int64_t p) {
  a %= p;
  if (a < 0) a += p;
  if (a == 0) throw std::domain_error("inv_mod: zero has no inverse");
  // extended Euclid
  int64_t t = 0, nt = 1, r = p, nr = a;
  while (nr != 0) {
    int64_t q = r / nr;
    int64_t tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  if (r != 1) throw std::domain_error("inv_mod: not invertible");
  if (t < 0) t += p;
  return t;
}

// Runs fn(i) for i in [0, n).  jobs <= 1 means serial.  Exceptions from
// workers are rethrown on the calling thread (first one wins).
inline void parallel_for(size_t n, const std::function<void(size_t)>& fn, int jobs) {
  if (jobs <= 1 || n <= 1) {
    for (size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  size_t nthreads = std::min<size_t>(jobs, n);
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errs(nthreads);
  std::atomic<size_t> next{0};
  for (size_t t = 0; t < nthreads; ++t) {
    pool.emplace_back([&, t]() {
      try {
        for (;;) {
          size_t i = next.fetch_add(1);
          if (i >= n) break;
          fn(i);
        }
      } catch (...) {
        errs[t] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errs)
    if (e) std::rethrow_exception(e);
}

inline int default_jobs() {
  unsigned c = std::thread::hardware_concurrency();
  return c == 0 ? 1 : static_cast<int>(c);
}

}  // namespace skewlab
