#include "boolgrade/rs_afunction.hpp"

#include <algorithm>
#include <numeric>

#include "boolgrade/errors.hpp"
#include "boolgrade/runs_matching.hpp"

namespace boolgrade {

YoungShape::YoungShape(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0 || (i > 0 && parts_[i] > parts_[i - 1])) {
      throw InvalidArgument("not a partition: " + to_string(*this));
    }
  }
}

int YoungShape::size() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

int YoungShape::row(int i) const {
  return i >= 1 && i <= rows() ? parts_[static_cast<std::size_t>(i - 1)] : 0;
}

YoungShape YoungShape::transpose() const {
  std::vector<int> cols;
  const int width = parts_.empty() ? 0 : parts_.front();
  for (int c = 1; c <= width; ++c) {
    int height = 0;
    for (int p : parts_) height += p >= c ? 1 : 0;
    cols.push_back(height);
  }
  return YoungShape(std::move(cols));
}

std::string to_string(const YoungShape& shape) {
  std::string out;
  for (std::size_t i = 0; i < shape.parts().size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(shape.parts()[i]);
  }
  return out;
}

YoungShape parse_shape(std::string_view text) {
  std::vector<int> parts;
  std::string tok;
  for (char c : text) {
    if (c == ',') {
      parts.push_back(std::stoi(tok));
      tok.clear();
    } else if (c != ' ') {
      tok += c;
    }
  }
  if (!tok.empty()) parts.push_back(std::stoi(tok));
  return YoungShape(std::move(parts));
}

YoungShape rs_shape(const Permutation& w) {
  std::vector<std::vector<int>> rows;
  for (int i = 1; i <= w.degree(); ++i) {
    int x = w(i);
    for (auto& row : rows) {
      auto it = std::upper_bound(row.begin(), row.end(), x);
      if (it == row.end()) {
        row.push_back(x);
        x = 0;
        break;
      }
      std::swap(*it, x);
    }
    if (x != 0) rows.push_back({x});
  }
  std::vector<int> parts;
  for (const auto& row : rows) parts.push_back(static_cast<int>(row.size()));
  return YoungShape(std::move(parts));
}

int a_function(const Permutation& w) {
  int a = 0;
  const YoungShape columns = rs_shape(w).transpose();
  for (int c : columns.parts()) a += c * (c - 1) / 2;
  return a;
}

Permutation longest_parabolic_element(std::span<const int> blocks, int n) {
  std::vector<int> images;
  int start = 0;
  for (int b : blocks) {
    if (b <= 0) throw InvalidArgument("block sizes must be positive");
    for (int k = b; k >= 1; --k) images.push_back(start + k);
    start += b;
  }
  if (start != n) {
    throw InvalidArgument("block sizes sum to " + std::to_string(start) +
                          ", expected " + std::to_string(n));
  }
  return Permutation(images);
}

Permutation longest_parabolic_element(const YoungShape& mu, int n) {
  return longest_parabolic_element(mu.parts(), n);
}

namespace {

void partitions_rec(int remaining, int cap, std::vector<int>& prefix,
                    std::vector<YoungShape>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int p = std::min(cap, remaining); p >= 1; --p) {
    prefix.push_back(p);
    partitions_rec(remaining - p, p, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<YoungShape> partitions(int n) {
  std::vector<YoungShape> out;
  std::vector<int> prefix;
  partitions_rec(n, n, prefix, out);
  return out;
}

std::vector<std::vector<int>> compositions(int n) {
  std::vector<std::vector<int>> out;
  // Bit i of the mask set means a block boundary after position i+1.
  for (std::uint32_t mask = 0; mask < (1u << (n - 1)); ++mask) {
    std::vector<int> blocks;
    int size = 1;
    for (int i = 0; i < n - 1; ++i) {
      if ((mask >> i) & 1u) {
        blocks.push_back(size);
        size = 1;
      } else {
        ++size;
      }
    }
    blocks.push_back(size);
    out.push_back(std::move(blocks));
  }
  return out;
}

bool second_row_equals_runs_check(const Permutation& v) {
  if (!is_boolean(v)) throw InvalidArgument(to_string(v) + " is not boolean");
  return rs_shape(v).row(2) == run_count(v);
}

}  // namespace boolgrade
