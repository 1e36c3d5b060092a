#include "qcs/engine/quiver.hpp"

#include "qcs/error.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace qcs {

namespace {

std::optional<std::vector<int>> topo_sort(int n,
                                          const std::vector<std::pair<int, int>>& arrows) {
  std::vector<std::vector<int>> out(n);
  std::vector<int> indeg(n, 0);
  for (auto [s, t] : arrows) {
    out[s].push_back(t);
    ++indeg[t];
  }
  std::vector<int> order;
  std::vector<int> stack;
  for (int v = 0; v < n; ++v)
    if (indeg[v] == 0) stack.push_back(v);
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    order.push_back(v);
    for (int w : out[v])
      if (--indeg[w] == 0) stack.push_back(w);
  }
  if (static_cast<int>(order.size()) != n) return std::nullopt;
  return order;
}

}  // namespace

bool Quiver::is_acyclic() const { return topo_sort(n, arrows).has_value(); }

std::optional<std::vector<int>> Quiver::topological_order() const {
  return topo_sort(n, arrows);
}

Quiver Quiver::reversed() const {
  Quiver r;
  r.n = n;
  r.arrows.reserve(arrows.size());
  for (auto [s, t] : arrows) r.arrows.emplace_back(t, s);
  return r;
}

IceQuiver::IceQuiver(int m, int n, std::vector<std::pair<int, int>> arrows)
    : m_(m), n_(n), arrows_(std::move(arrows)) {
  if (m_ < 1 || n_ < 1 || n_ > m_) throw parse_error("invalid vertex counts");
  std::set<std::pair<int, int>> pairs;
  for (auto [s, t] : arrows_) {
    if (s < 0 || s >= m_ || t < 0 || t >= m_)
      throw parse_error("arrow endpoint out of range");
    if (s == t) throw parse_error("loops are not allowed");
    pairs.insert({s, t});
  }
  for (auto [s, t] : pairs)
    if (pairs.count({t, s}))
      throw parse_error("2-cycles are not allowed");
  if (!principal_part().is_acyclic())
    throw parse_error("principal part not acyclic");
  fully_acyclic_ = topo_sort(m_, arrows_).has_value();
}

Quiver IceQuiver::principal_part() const {
  Quiver q;
  q.n = n_;
  for (auto [s, t] : arrows_)
    if (s < n_ && t < n_) q.arrows.emplace_back(s, t);
  return q;
}

IMat IceQuiver::b_matrix() const {
  IMat b(m_, n_);
  for (auto [s, t] : arrows_) {
    if (t < n_) b.at(s, t) += 1;
    if (s < n_) b.at(t, s) -= 1;
  }
  return b;
}

IMat IceQuiver::extended_b_matrix() const {
  IMat b(m_, m_);
  for (auto [s, t] : arrows_) {
    b.at(s, t) += 1;
    b.at(t, s) -= 1;
  }
  return b;
}

QuiverFile parse_quiver_file(std::istream& in, const std::string& name) {
  int m = -1;
  std::set<int> frozen;
  std::vector<std::pair<int, int>> arrows;
  QuiverFile::LambdaSpec spec = QuiverFile::LambdaSpec::none;
  std::vector<std::vector<Int>> lambda_rows;

  std::string line;
  int lineno = 0;
  auto fail = [&](const std::string& msg) {
    std::ostringstream os;
    os << name << ":" << lineno << ": " << msg;
    throw parse_error(os.str());
  };
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head) || head[0] == '#') continue;
    if (head == "vertices") {
      if (!(ls >> m) || m < 1) fail("expected positive vertex count");
    } else if (head == "frozen") {
      int j;
      while (ls >> j) {
        if (j < 1 || j > m) fail("frozen vertex out of range");
        frozen.insert(j);
      }
    } else if (head == "arrow") {
      int i, j;
      if (!(ls >> i >> j)) fail("expected 'arrow i j'");
      if (m < 0 || i < 1 || i > m || j < 1 || j > m)
        fail("arrow endpoint out of range");
      arrows.emplace_back(i - 1, j - 1);
    } else if (head == "lambda") {
      std::string kind;
      if (!(ls >> kind)) fail("expected 'lambda auto' or 'lambda row ...'");
      if (kind == "auto") {
        spec = QuiverFile::LambdaSpec::automatic;
      } else if (kind == "row") {
        spec = QuiverFile::LambdaSpec::rows;
        std::vector<Int> row;
        long long x;
        while (ls >> x) row.emplace_back(x);
        if (m < 0 || static_cast<int>(row.size()) != m)
          fail("lambda row must have m entries");
        lambda_rows.push_back(std::move(row));
      } else {
        fail("unknown lambda spec");
      }
    } else {
      fail("unknown directive '" + head + "'");
    }
  }
  if (m < 1) throw parse_error(name + ": missing 'vertices' directive");
  const int n = m - static_cast<int>(frozen.size());
  for (int j = n + 1; j <= m; ++j)
    if (!frozen.count(j))
      throw parse_error(name + ": frozen vertices must be the trailing indices");
  IMat lam;
  if (spec == QuiverFile::LambdaSpec::rows) {
    if (static_cast<int>(lambda_rows.size()) != m)
      throw parse_error(name + ": expected m lambda rows");
    lam = IMat(m, m);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) lam.at(i, j) = lambda_rows[i][j];
  }
  return QuiverFile{IceQuiver(m, n, std::move(arrows)), spec, lam};
}

QuiverFile load_quiver_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open quiver file: " + path);
  return parse_quiver_file(in, path);
}

}  // namespace qcs
