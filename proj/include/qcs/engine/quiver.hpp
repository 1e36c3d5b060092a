#pragma once

#include "qcs/exact/matrix.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qcs {

// Principal quiver: vertices 1..n (stored 0-based), arrow multiset.
struct Quiver {
  int n = 0;
  std::vector<std::pair<int, int>> arrows;  // (source, target), 0-based

  bool is_acyclic() const;
  // Vertices ordered so that every arrow goes from an earlier to a later
  // vertex; empty when the quiver has a cycle.
  std::optional<std::vector<int>> topological_order() const;
  Quiver reversed() const;
};

// Ice quiver: m total vertices, the first n mutable, the rest frozen.
class IceQuiver {
public:
  IceQuiver(int m, int n, std::vector<std::pair<int, int>> arrows);

  int total_vertices() const { return m_; }
  int mutable_vertices() const { return n_; }
  const std::vector<std::pair<int, int>>& arrows() const { return arrows_; }

  bool fully_acyclic() const { return fully_acyclic_; }

  Quiver principal_part() const;

  // m x n matrix with entry (i,j) = #arrows i->j minus #arrows j->i.
  IMat b_matrix() const;
  // m x m matrix of the full quiver with the same entry rule.
  IMat extended_b_matrix() const;

private:
  int m_, n_;
  std::vector<std::pair<int, int>> arrows_;
  bool fully_acyclic_;
};

// Quiver file: one directive per line, "vertices m", optional "frozen j...",
// repeated "arrow i j", optional "lambda auto" or m "lambda row ..." lines.
struct QuiverFile {
  IceQuiver quiver;
  enum class LambdaSpec { none, automatic, rows };
  LambdaSpec lambda_spec = LambdaSpec::none;
  IMat lambda_rows;  // valid when lambda_spec == rows
};

QuiverFile parse_quiver_file(std::istream& in, const std::string& name);
QuiverFile load_quiver_file(const std::string& path);

}  // namespace qcs
