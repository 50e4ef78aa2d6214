#pragma once

// Shared plumbing for the finite-algebra workbench: element type, error
// hierarchy, resource caps, and small combinatorial helpers used by the
// exhaustive searches.

#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace ua {

using Element = int;

struct UaError : std::runtime_error {
  explicit UaError(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input data (bad table shape, out-of-range element, unknown op).
// `where` locates the offending field, JSON-pointer style, when known.
struct ValidationError : UaError {
  std::string where;
  explicit ValidationError(const std::string& msg, std::string where_ = "")
      : UaError(where_.empty() ? msg : where_ + ": " + msg), where(std::move(where_)) {}
};

// A search hit an explicit resource cap. Carries how far it got so reports
// can show partial progress. Never used for verdicts, only for aborts.
struct CapExceeded : UaError {
  long long partial;
  explicit CapExceeded(const std::string& msg, long long partial_ = 0)
      : UaError(msg), partial(partial_) {}
};

// Caps for the backtracking/closure searches. Defaults are the documented
// ones: one million search nodes, one million results.
struct Caps {
  long long max_nodes = 1'000'000;
  long long max_results = 1'000'000;
};

inline long long ipow(long long base, int exp) {
  long long r = 1;
  for (int i = 0; i < exp; ++i) {
    r *= base;
    if (r < 0 || r > (1LL << 62)) throw CapExceeded("power overflow computing table size");
  }
  return r;
}

// Visits every tuple in {0..size-1}^arity in lexicographic order.
// `fn` may return false to stop early; for_each_tuple returns false in that case.
inline bool for_each_tuple(int size, int arity, const std::function<bool(std::span<const Element>)>& fn) {
  std::vector<Element> t(static_cast<size_t>(arity), 0);
  if (arity == 0) return fn(t);
  if (size == 0) return true;  // no tuples at all
  while (true) {
    if (!fn(t)) return false;
    int i = arity - 1;
    while (i >= 0 && t[static_cast<size_t>(i)] == size - 1) t[static_cast<size_t>(i--)] = 0;
    if (i < 0) return true;
    ++t[static_cast<size_t>(i)];
  }
}

// Row-major index of a tuple over a fixed radix.
inline long long tuple_index(int size, std::span<const Element> t) {
  long long idx = 0;
  for (Element a : t) idx = idx * size + a;
  return idx;
}

inline std::vector<Element> tuple_of_index(int size, int arity, long long idx) {
  std::vector<Element> t(static_cast<size_t>(arity));
  for (int i = arity - 1; i >= 0; --i) {
    t[static_cast<size_t>(i)] = static_cast<Element>(idx % size);
    idx /= size;
  }
  return t;
}

struct VecHash {
  size_t operator()(const std::vector<Element>& v) const {
    size_t h = 1469598103934665603ull;
    for (Element e : v) {
      h ^= static_cast<size_t>(e) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }
};

// FNV-1a over raw bytes; used for input digests in reports.
inline std::string fnv1a_hex(std::span<const unsigned char> bytes) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char b : bytes) {
    h ^= b;
    h *= 1099511628211ull;
  }
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<size_t>(i)] = digits[h & 0xf];
    h >>= 4;
  }
  return out;
}

}  // namespace ua
