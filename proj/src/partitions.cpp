#include "qchrom/partitions.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace qchrom {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0)
      throw SizeMismatch("Partition: parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw SizeMismatch("Partition: parts must be weakly decreasing");
  }
}

int Partition::size() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::part(int i) const {
  if (i < 1 || i > length()) return 0;
  return parts_[i - 1];
}

Partition Partition::conjugate() const {
  if (parts_.empty()) return Partition();
  std::vector<int> c(parts_[0], 0);
  for (int p : parts_)
    for (int j = 0; j < p; ++j) ++c[j];
  return Partition(std::move(c));
}

bool Partition::contains(const Partition& inner) const {
  if (inner.length() > length()) return false;
  for (int i = 1; i <= inner.length(); ++i)
    if (inner.part(i) > part(i)) return false;
  return true;
}

std::string Partition::to_string() const {
  std::ostringstream ss;
  ss << "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) ss << ",";
    ss << parts_[i];
  }
  ss << ")";
  return ss.str();
}

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_)
    if (p <= 0) throw SizeMismatch("Composition: parts must be positive");
}

int Composition::size() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Composition::sorted() const {
  std::vector<int> p = parts_;
  std::sort(p.begin(), p.end(), std::greater<int>());
  return Partition(std::move(p));
}

std::string Composition::to_string() const {
  std::ostringstream ss;
  ss << "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) ss << ",";
    ss << parts_[i];
  }
  ss << ")";
  return ss.str();
}

namespace {

void partitions_rec(int n, int maxpart, std::vector<int>& acc,
                    std::vector<Partition>& out) {
  if (n == 0) {
    out.emplace_back(acc);
    return;
  }
  for (int p = std::min(n, maxpart); p >= 1; --p) {
    acc.push_back(p);
    partitions_rec(n - p, p, acc, out);
    acc.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> acc;
  partitions_rec(n, n, acc, out);
  return out;  // already in lex-decreasing order
}

std::vector<Composition> compositions_of(int n) {
  std::vector<Composition> out;
  if (n == 0) {
    out.emplace_back();
    return out;
  }
  // one composition per subset of {1..n-1} (the descent positions)
  for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
    std::vector<int> parts;
    int prev = 0;
    for (int i = 1; i < n; ++i) {
      if (mask & (1u << (i - 1))) {
        parts.push_back(i - prev);
        prev = i;
      }
    }
    parts.push_back(n - prev);
    out.emplace_back(std::move(parts));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Composition composition_of_descents(const std::set<int>& descents, int n) {
  std::vector<int> parts;
  int prev = 0;
  for (int d : descents) {
    if (d < 1 || d > n - 1)
      throw SizeMismatch("composition_of_descents: descent out of range");
    parts.push_back(d - prev);
    prev = d;
  }
  if (n - prev > 0) parts.push_back(n - prev);
  return Composition(std::move(parts));
}

std::set<int> descents_of_composition(const Composition& alpha) {
  std::set<int> d;
  int s = 0;
  for (int i = 0; i + 1 < alpha.length(); ++i) {
    s += alpha.parts()[i];
    d.insert(s);
  }
  return d;
}

std::vector<Composition> refinements(const Composition& alpha) {
  std::vector<std::vector<int>> acc{{}};
  for (int part : alpha.parts()) {
    std::vector<std::vector<int>> next;
    for (const auto& blk : compositions_of(part)) {
      for (const auto& prefix : acc) {
        auto v = prefix;
        v.insert(v.end(), blk.parts().begin(), blk.parts().end());
        next.push_back(std::move(v));
      }
    }
    acc = std::move(next);
  }
  std::vector<Composition> out;
  out.reserve(acc.size());
  for (auto& v : acc) out.emplace_back(std::move(v));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Composition> coarsenings(const Composition& beta) {
  std::vector<Composition> out;
  int k = beta.length();
  if (k == 0) {
    out.push_back(beta);
    return out;
  }
  for (unsigned mask = 0; mask < (1u << (k - 1)); ++mask) {
    // bit i set: keep the boundary after part i; clear: merge
    std::vector<int> parts;
    int run = 0;
    for (int i = 0; i < k; ++i) {
      run += beta.parts()[i];
      bool boundary = (i == k - 1) || (mask & (1u << i));
      if (boundary) {
        parts.push_back(run);
        run = 0;
      }
    }
    out.emplace_back(std::move(parts));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool refines(const Composition& beta, const Composition& alpha) {
  if (beta.size() != alpha.size()) return false;
  std::size_t bi = 0;
  for (int part : alpha.parts()) {
    int run = 0;
    while (run < part) {
      if (bi >= beta.parts().size()) return false;
      run += beta.parts()[bi++];
    }
    if (run != part) return false;
  }
  return bi == beta.parts().size();
}

Partition partition_from_parts(std::vector<int> parts) {
  parts.erase(std::remove(parts.begin(), parts.end(), 0), parts.end());
  std::sort(parts.begin(), parts.end(), std::greater<int>());
  return Partition(std::move(parts));
}

}  // namespace qchrom
