#include "grasshilb/schubert.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>

#include "grasshilb/error.hpp"

namespace grasshilb {

BoxContext::BoxContext(int k, int n) : k_(k), n_(n) {
  if (!(1 < k && k < n - 1)) {
    throw Error(ErrorKind::InvalidParameter,
                "G(" + std::to_string(k) + "," + std::to_string(n) +
                    ") needs 1 < k < n-1 (otherwise it is a projective space)");
  }
}

Partition validate_partition(std::span<const int> parts, const BoxContext& ctx) {
  if (parts.size() != static_cast<std::size_t>(ctx.k())) {
    throw Error(ErrorKind::WrongPartCount, "partition needs exactly " + std::to_string(ctx.k()) +
                                               " parts, got " + std::to_string(parts.size()));
  }
  for (int p : parts) {
    if (p < 0) throw Error(ErrorKind::NegativePart, "negative part " + std::to_string(p));
  }
  for (int p : parts) {
    if (p > ctx.width()) {
      throw Error(ErrorKind::PartExceedsWidth, "part " + std::to_string(p) +
                                                   " exceeds width " + std::to_string(ctx.width()));
    }
  }
  for (std::size_t i = 1; i < parts.size(); ++i) {
    if (parts[i] > parts[i - 1]) {
      throw Error(ErrorKind::NotWeaklyDecreasing, "parts are not weakly decreasing");
    }
  }
  return Partition(std::vector<int>(parts.begin(), parts.end()));
}

Partition validate_partition(std::initializer_list<int> parts, const BoxContext& ctx) {
  return validate_partition(std::span<const int>(parts.begin(), parts.size()), ctx);
}

int codimension(const Partition& a) {
  return std::accumulate(a.parts().begin(), a.parts().end(), 0);
}

std::vector<Partition> all_partitions(const BoxContext& ctx) {
  std::vector<Partition> out;
  std::vector<int> parts(ctx.k());
  std::function<void(int, int)> fill = [&](int i, int cap) {
    if (i == ctx.k()) {
      out.push_back(validate_partition(parts, ctx));
      return;
    }
    for (int v = 0; v <= cap; ++v) {
      parts[i] = v;
      fill(i + 1, v);
    }
  };
  fill(0, ctx.width());
  std::sort(out.begin(), out.end());
  return out;
}

Partition full_rows_then(int full_rows, std::span<const int> rest, const BoxContext& ctx) {
  std::vector<int> parts(static_cast<std::size_t>(std::max(full_rows, 0)), ctx.width());
  parts.insert(parts.end(), rest.begin(), rest.end());
  while (parts.size() < static_cast<std::size_t>(ctx.k())) parts.push_back(0);
  return validate_partition(parts, ctx);
}

std::int64_t ClassSum::coefficient(const Partition& a) const {
  auto it = terms_.find(a);
  return it == terms_.end() ? 0 : it->second;
}

void ClassSum::add(const Partition& a, std::int64_t coefficient) {
  if (a.size() != static_cast<std::size_t>(context_.k())) {
    throw Error(ErrorKind::DimensionMismatch, "partition from a different box");
  }
  auto& slot = terms_[a];
  slot += coefficient;
  if (slot == 0) terms_.erase(a);
}

ClassSum ClassSum::scaled(std::int64_t factor) const {
  ClassSum out(context_);
  if (factor == 0) return out;
  for (const auto& [a, c] : terms_) out.terms_.emplace(a, c * factor);
  return out;
}

std::optional<std::pair<Partition, std::int64_t>> ClassSum::single_term() const {
  if (terms_.size() != 1) return std::nullopt;
  return *terms_.begin();
}

ClassSum operator+(const ClassSum& a, const ClassSum& b) {
  if (!(a.context() == b.context())) {
    throw Error(ErrorKind::DimensionMismatch, "adding classes from different Grassmannians");
  }
  ClassSum out = a;
  for (const auto& [p, c] : b.terms()) out.add(p, c);
  return out;
}

ClassSum pieri(int h, const Partition& a, const BoxContext& ctx) {
  if (h < 1 || h > ctx.width()) {
    throw Error(ErrorKind::InvalidParameter,
                "pieri degree " + std::to_string(h) + " outside [1, " +
                    std::to_string(ctx.width()) + "]");
  }
  const int k = ctx.k();
  ClassSum out(ctx);
  std::vector<int> b(k);
  // b_i ranges over [a_i, a_{i-1}] (b_1 over [a_1, width]); `left` boxes remain.
  std::function<void(int, int)> place = [&](int i, int left) {
    if (i == k) {
      if (left == 0) out.add(validate_partition(b, ctx), 1);
      return;
    }
    const int upper = i == 0 ? ctx.width() : a[i - 1];
    for (int v = a[i]; v <= upper && v - a[i] <= left; ++v) {
      b[i] = v;
      place(i + 1, left - (v - a[i]));
    }
  };
  place(0, h);
  return out;
}

std::int64_t lr_coefficient(const Partition& inner, const Partition& content,
                            const Partition& outer) {
  const std::size_t rows = outer.size();
  for (std::size_t i = 0; i < rows; ++i)
    if (inner[i] > outer[i]) return 0;
  if (codimension(outer) != codimension(inner) + codimension(content)) return 0;

  const int width = outer[0];
  // fill[i][c] is the entry of cell (i, c) of the skew shape, 0 when unset.
  std::vector<std::vector<int>> fill(rows, std::vector<int>(static_cast<std::size_t>(width), 0));
  const std::size_t letters = content.size();
  std::vector<int> used(letters + 1, 0);
  std::int64_t count = 0;

  // Cells are visited in reverse reading order: rows top to bottom, each row
  // right to left, so the lattice condition can be checked on every prefix.
  std::function<void(std::size_t, int)> visit = [&](std::size_t row, int col) {
    if (row == rows) {
      for (std::size_t v = 1; v <= letters; ++v)
        if (used[v] != content[v - 1]) return;
      ++count;
      return;
    }
    if (col < inner[row]) {
      const std::size_t next = row + 1;
      visit(next, next < rows ? outer[next] - 1 : 0);
      return;
    }
    const int right = col + 1 < outer[row] ? fill[row][col + 1] : static_cast<int>(letters);
    int above = 0;
    if (row > 0 && col < outer[row - 1] && col >= inner[row - 1]) above = fill[row - 1][col];
    for (int v = above + 1; v <= right; ++v) {
      if (used[v] >= content[v - 1]) continue;
      if (v > 1 && used[v] + 1 > used[v - 1]) continue;
      fill[row][col] = v;
      ++used[v];
      visit(row, col - 1);
      --used[v];
      fill[row][col] = 0;
    }
  };
  visit(0, outer[0] - 1);
  return count;
}

ClassSum lr_multiply(const Partition& a, const Partition& b, const BoxContext& ctx) {
  ClassSum out(ctx);
  const int target = codimension(a) + codimension(b);
  if (target > ctx.top_codimension()) return out;
  for (const auto& nu : all_partitions(ctx)) {
    if (codimension(nu) != target) continue;
    const std::int64_t c = lr_coefficient(a, b, nu);
    if (c != 0) out.add(nu, c);
  }
  return out;
}

std::string to_string(const Partition& a) {
  std::string out = "[";
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(a[i]);
  }
  return out + "]";
}

std::string to_string(const ClassSum& s) {
  if (s.empty()) return "0";
  std::string out;
  bool first = true;
  // Highest partitions first reads naturally for class tables.
  for (auto it = s.terms().rbegin(); it != s.terms().rend(); ++it) {
    std::int64_t c = it->second;
    if (!first) out += c < 0 ? " - " : " + ";
    else if (c < 0) out += "-";
    if (c < 0) c = -c;
    if (c != 1) out += std::to_string(c) + "*";
    out += "sigma" + to_string(it->first);
    first = false;
  }
  return out;
}

Partition parse_partition(std::string_view text, const BoxContext& ctx) {
  std::vector<int> parts;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip();
  if (i >= text.size() || text[i] != '[') throw Error(ErrorKind::Parse, "partition must start with '['");
  ++i;
  skip();
  if (i < text.size() && text[i] == ']') {
    ++i;
  } else {
    while (true) {
      skip();
      bool negative = false;
      if (i < text.size() && text[i] == '-') negative = true, ++i;
      if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i]))) {
        throw Error(ErrorKind::Parse, "expected an integer part");
      }
      long value = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        value = value * 10 + (text[i] - '0');
        if (value > 1'000'000) throw Error(ErrorKind::Parse, "part too large");
        ++i;
      }
      parts.push_back(static_cast<int>(negative ? -value : value));
      skip();
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      if (i < text.size() && text[i] == ']') {
        ++i;
        break;
      }
      throw Error(ErrorKind::Parse, "expected ',' or ']'");
    }
  }
  skip();
  if (i != text.size()) throw Error(ErrorKind::Parse, "trailing characters after partition");
  return validate_partition(parts, ctx);
}

}  // namespace grasshilb
