#pragma once

// Robinson–Schensted shapes and Lusztig's a-function in type A.

#include <span>
#include <string>
#include <vector>

#include "boolgrade/permutation.hpp"

namespace boolgrade {

/// A partition, parts weakly decreasing and positive.
class YoungShape {
 public:
  YoungShape() = default;
  /// Throws InvalidArgument unless parts are positive and weakly decreasing.
  explicit YoungShape(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int size() const;
  int rows() const { return static_cast<int>(parts_.size()); }
  /// Length of row i (1-based); 0 past the last row.
  int row(int i) const;
  YoungShape transpose() const;

  friend bool operator==(const YoungShape&, const YoungShape&) = default;

 private:
  std::vector<int> parts_;
};

std::string to_string(const YoungShape& shape);  // "3,2"
YoungShape parse_shape(std::string_view text);

/// Shape of the insertion tableau under Schensted row insertion.
YoungShape rs_shape(const Permutation& w);

/// sum over the columns of the shape of c(c-1)/2.
int a_function(const Permutation& w);

/// Longest element of S_{b_1} × S_{b_2} × ... for consecutive blocks of the
/// given sizes: each block is reversed.
Permutation longest_parabolic_element(std::span<const int> blocks, int n);
Permutation longest_parabolic_element(const YoungShape& mu, int n);

/// Every partition of n, in reverse lexicographic order.
std::vector<YoungShape> partitions(int n);
/// Every composition of n (ordered block sizes), 2^{n-1} of them.
std::vector<std::vector<int>> compositions(int n);

/// lambda_2(v) == run(v) for boolean v.
bool second_row_equals_runs_check(const Permutation& v);

}  // namespace boolgrade
