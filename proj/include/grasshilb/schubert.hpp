#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace grasshilb {

/// The k x (n-k) box of G(k, n). Requires 1 < k < n - 1.
class BoxContext {
 public:
  BoxContext(int k, int n);

  int k() const noexcept { return k_; }
  int n() const noexcept { return n_; }
  int width() const noexcept { return n_ - k_; }
  /// Codimension of the point class, k(n-k).
  int top_codimension() const noexcept { return k_ * (n_ - k_); }

  friend bool operator==(const BoxContext&, const BoxContext&) = default;

 private:
  int k_;
  int n_;
};

/// Weakly decreasing sequence of exactly k parts, each in [0, n-k]. Only
/// `validate_partition` and the enumerators build one.
class Partition {
 public:
  std::span<const int> parts() const noexcept { return parts_; }
  int operator[](std::size_t i) const { return parts_[i]; }
  std::size_t size() const noexcept { return parts_.size(); }

  friend auto operator<=>(const Partition&, const Partition&) = default;
  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  friend Partition validate_partition(std::span<const int> parts, const BoxContext& ctx);
  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {}
  std::vector<int> parts_;
};

/// Throws Error with kind WrongPartCount, NegativePart, PartExceedsWidth or
/// NotWeaklyDecreasing (checked in that order).
Partition validate_partition(std::span<const int> parts, const BoxContext& ctx);
Partition validate_partition(std::initializer_list<int> parts, const BoxContext& ctx);

int codimension(const Partition& a);

/// Every partition in the box, in lexicographically increasing order.
std::vector<Partition> all_partitions(const BoxContext& ctx);

/// ((n-k)^count, rest...) zero padded; shorthand for the class tables.
Partition full_rows_then(int full_rows, std::span<const int> rest, const BoxContext& ctx);

struct SchubertClass {
  Partition partition;
  BoxContext context;

  friend bool operator==(const SchubertClass&, const SchubertClass&) = default;
};

/// Formal integer combination of Schubert classes in one box. Zero
/// coefficients are never stored.
class ClassSum {
 public:
  explicit ClassSum(BoxContext ctx) : context_(ctx) {}

  const BoxContext& context() const noexcept { return context_; }
  const std::map<Partition, std::int64_t>& terms() const noexcept { return terms_; }
  bool empty() const noexcept { return terms_.empty(); }
  std::int64_t coefficient(const Partition& a) const;

  void add(const Partition& a, std::int64_t coefficient);
  ClassSum scaled(std::int64_t factor) const;
  /// The (partition, coefficient) pair when exactly one term is present.
  std::optional<std::pair<Partition, std::int64_t>> single_term() const;

  friend bool operator==(const ClassSum&, const ClassSum&) = default;

 private:
  BoxContext context_;
  std::map<Partition, std::int64_t> terms_;
};

ClassSum operator+(const ClassSum& a, const ClassSum& b);

/// sigma_h * sigma_a by the Pieri rule: one term per partition b in the box
/// with |b| = |a| + h and width >= b_1 >= a_1 >= b_2 >= ... >= b_k >= a_k.
/// Requires 1 <= h <= width.
ClassSum pieri(int h, const Partition& a, const BoxContext& ctx);

/// sigma_a * sigma_b with Littlewood-Richardson coefficients counted by
/// enumerating LR skew tableaux, truncated to the box.
ClassSum lr_multiply(const Partition& a, const Partition& b, const BoxContext& ctx);

/// Number of LR tableaux of shape outer/inner with the given content.
std::int64_t lr_coefficient(const Partition& inner, const Partition& content,
                            const Partition& outer);

/// "[3,3,2]"
std::string to_string(const Partition& a);
/// "3*sigma[5,5,3] + sigma[5,4,4]"; "0" when empty.
std::string to_string(const ClassSum& s);
/// Parses "[3,3,2]" (whitespace tolerated) and validates it in `ctx`.
Partition parse_partition(std::string_view text, const BoxContext& ctx);

}  // namespace grasshilb
