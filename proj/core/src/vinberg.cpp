#include "hyperdef/vinberg.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace hyperdef {

Mat<ParamScalar> gram_matrix(const Arrangement& arr, const std::vector<size_t>& idx) {
  auto v = arr.exact_vectors();
  Mat<ParamScalar> g(idx.size(), Vec<ParamScalar>(idx.size()));
  for (size_t a = 0; a < idx.size(); ++a)
    for (size_t b = a; b < idx.size(); ++b) g[a][b] = g[b][a] = mink_dot(v[idx[a]], v[idx[b]]);
  return g;
}

SubdiagramClass classify_subdiagram(const Arrangement& arr, const std::vector<std::string>& labels) {
  auto idx = arr.indices_of(labels);
  auto v = arr.exact_vectors();
  for (size_t i : idx)
    if (sign_of(mink_dot(v[i], v[i])) <= 0) throw PreconditionError("walls must be space-like");
  return classify_gram(gram_matrix(arr, idx));
}

int cusp_rank(const Arrangement& arr, const std::vector<std::string>& labels) {
  auto c = classify_subdiagram(arr, labels);
  return c.kind == SubdiagramClass::Kind::Parabolic ? c.rank : 0;
}

namespace {

using Mask = std::uint64_t;

// Memoised classification of subsets of one arrangement.
class SubsetClassifier {
 public:
  explicit SubsetClassifier(const Arrangement& arr) {
    auto v = arr.exact_vectors();
    n_ = v.size();
    if (n_ > 63) throw PreconditionError("too many walls for the Vinberg check");
    g_.assign(n_, Vec<ParamScalar>(n_));
    for (size_t a = 0; a < n_; ++a)
      for (size_t b = a; b < n_; ++b) g_[a][b] = g_[b][a] = mink_dot(v[a], v[b]);
  }
  const SubdiagramClass& operator()(Mask m) {
    auto it = memo_.find(m);
    if (it != memo_.end()) return it->second;
    std::vector<size_t> idx = members(m);
    Mat<ParamScalar> sub(idx.size(), Vec<ParamScalar>(idx.size()));
    for (size_t a = 0; a < idx.size(); ++a)
      for (size_t b = 0; b < idx.size(); ++b) sub[a][b] = g_[idx[a]][idx[b]];
    return memo_.emplace(m, classify_gram(sub)).first->second;
  }
  static std::vector<size_t> members(Mask m) {
    std::vector<size_t> out;
    for (size_t i = 0; m; ++i, m >>= 1)
      if (m & 1) out.push_back(i);
    return out;
  }
  const Mat<ParamScalar>& gram() const { return g_; }

 private:
  size_t n_ = 0;
  Mat<ParamScalar> g_;
  std::map<Mask, SubdiagramClass> memo_;
};

void for_each_subset(size_t n, size_t k, const std::function<void(Mask)>& f) {
  std::vector<size_t> c(k);
  for (size_t i = 0; i < k; ++i) c[i] = i;
  if (k > n) return;
  for (;;) {
    Mask m = 0;
    for (size_t i : c) m |= Mask(1) << i;
    f(m);
    size_t i = k;
    while (i > 0 && c[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++c[i - 1];
    for (size_t j = i; j < k; ++j) c[j] = c[j - 1] + 1;
  }
}

std::vector<std::string> names(const Arrangement& arr, Mask m) {
  std::vector<std::string> out;
  for (size_t i : SubsetClassifier::members(m)) out.push_back(arr.walls[i].label);
  return out;
}

void check_reflective(const Arrangement& arr) {
  RelationMatrix rm = relation_matrix(arr);
  for (size_t i = 0; i < rm.cells.size(); ++i)
    for (size_t j = i + 1; j < rm.cells.size(); ++j) {
      const PairInfo& p = rm.cells[i][j];
      std::string pair = "{" + rm.labels[i] + "," + rm.labels[j] + "}";
      if (p.kind == RelationKind::Intersecting && p.angle.kind != AngleClass::Kind::PiOver)
        throw PreconditionError("walls " + pair + " meet at an angle that is not pi/m");
      if (p.kind == RelationKind::Diverging)
        throw PreconditionError("walls " + pair + " violate the acute-angle condition");
    }
}

}  // namespace

VolumeVerdict finite_volume_check(const Arrangement& arr, const VolumeOptions& opts) {
  if (!arr.is_exact()) throw PreconditionError("finite_volume_check needs an exact parameter");
  if (!opts.allow_generic) check_reflective(arr);
  else relation_matrix(arr);  // still validates the walls
  const size_t n = arr.size();
  const size_t d = static_cast<size_t>(arr.dimension);
  SubsetClassifier cls(arr);
  using K = SubdiagramClass::Kind;

  VolumeVerdict out;
  std::set<Mask> vertices, cusps;
  for_each_subset(n, d - 1, [&](Mask edge) {
    if (cls(edge).kind != K::Elliptic) return;
    ++out.edges;
    size_t ends = 0;
    // Grow the edge one wall at a time. Every principal subdiagram of an
    // elliptic or parabolic diagram is elliptic or parabolic, so indefinite
    // sets are never extended.
    std::function<void(Mask, size_t, size_t)> grow = [&](Mask s, size_t from, size_t extra) {
      for (size_t w = from; w < n; ++w) {
        if (s & (Mask(1) << w)) continue;
        Mask t = s | (Mask(1) << w);
        const SubdiagramClass& c = cls(t);
        if (c.kind == K::Indefinite) continue;
        if (extra == 1 && c.kind == K::Elliptic) {
          ++ends;
          ++out.finite_edge_ends;
          vertices.insert(t);
        } else if (c.kind == K::Parabolic && c.pure && c.rank == static_cast<int>(d - 1)) {
          ++ends;
          ++out.cusp_edge_ends;
          cusps.insert(t);
        }
        if (extra < d - 1) grow(t, w + 1, extra + 1);
      }
    };
    grow(edge, 0, 1);
    if (ends != 2) out.bad_edges.push_back(names(arr, edge));
  });
  for (Mask m : vertices) out.finite_vertices.push_back(names(arr, m));
  for (Mask m : cusps) out.cusps.push_back({names(arr, m), cls(m).rank});
  out.finite_volume = out.bad_edges.empty() && out.edges > 0;
  return out;
}

// -------------------------------------------------------------- arithmeticity

ArithmeticityVerdict arithmeticity_check(const Arrangement& arr) {
  VolumeVerdict vol = finite_volume_check(arr);
  if (!vol.finite_volume) throw PreconditionError("arithmeticity_check: polytope does not have finite volume");
  if (vol.cusps.empty()) throw PreconditionError("arithmeticity_check: compact polytopes are not supported");

  SubsetClassifier cls(arr);
  const Mat<ParamScalar>& g = cls.gram();
  const size_t n = g.size();
  std::vector<std::vector<size_t>> adj(n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      if (i != j && !is_zero(g[i][j])) adj[i].push_back(j);

  ArithmeticityVerdict out;
  auto integral = [](const ParamScalar& x) { return x.odd().is_zero() && x.even().is_integer(); };
  auto fail = [&](std::vector<size_t> cyc, ParamScalar p) {
    CycleReport r;
    for (size_t v : cyc) r.cycle.push_back(arr.walls[v].label);
    r.product = std::move(p);
    out.failing = std::move(r);
  };

  // back and forth along one edge: label^2 = 4 g^2 / (N_i N_j)
  for (size_t i = 0; i < n && !out.failing; ++i)
    for (size_t j : adj[i]) {
      if (j < i) continue;
      ++out.cycles_checked;
      ParamScalar p = ParamScalar(4) * g[i][j] * g[i][j] / (g[i][i] * g[j][j]);
      if (!integral(p)) {
        fail({i, j}, p);
        break;
      }
    }

  // When every label -2 g_ij / sqrt(N_i N_j) is itself a rational integer, so
  // is every cyclic product; this settles dense diagrams without enumeration.
  if (!out.failing) {
    bool integral_labels = true;
    for (size_t i = 0; i < n && integral_labels; ++i)
      for (size_t j : adj[i]) {
        ParamScalar sq = ParamScalar(4) * g[i][j] * g[i][j] / (g[i][i] * g[j][j]);
        auto root = sq.odd().is_zero() ? field_sqrt(sq.even()) : std::nullopt;
        if (!root || !root->is_integer()) {
          integral_labels = false;
          break;
        }
      }
    if (integral_labels) {
      out.arithmetic = true;
      return out;
    }
  }

  // simple cycles of length >= 3, each once: smallest vertex first, and
  // second vertex smaller than the last. Every vertex sits on two cycle
  // edges, so the product is (-2)^k prod g_e / prod N_v and stays in F(t).
  std::vector<size_t> path;
  std::vector<bool> on(n, false);
  std::function<void(size_t, const ParamScalar&)> dfs = [&](size_t v, const ParamScalar& acc) {
    if (out.failing) return;
    size_t s = path.front();
    for (size_t w : adj[v]) {
      if (out.failing) return;
      if (w == s && path.size() >= 3 && path[1] < path.back()) {
        ++out.cycles_checked;
        ParamScalar p = acc * ParamScalar(-2) * g[v][w];
        for (size_t u : path) p = p / g[u][u];
        if (!integral(p)) fail(path, p);
        continue;
      }
      if (w <= s || on[w]) continue;
      on[w] = true;
      path.push_back(w);
      dfs(w, acc * ParamScalar(-2) * g[v][w]);
      path.pop_back();
      on[w] = false;
    }
  };
  for (size_t s = 0; s < n && !out.failing; ++s) {
    path = {s};
    on.assign(n, false);
    on[s] = true;
    dfs(s, ParamScalar(1));
  }
  out.arithmetic = !out.failing;
  return out;
}

// ------------------------------------------------------------------- scans

std::vector<std::vector<FieldElem>> TransitionScan::locations() const {
  std::vector<std::vector<FieldElem>> out;
  auto add = [&](std::vector<FieldElem> loc) {
    for (const auto& l : out)
      if (l == loc) return;
    out.push_back(std::move(loc));
  };
  using K = SubdiagramClass::Kind;
  for (const auto& t : transitions) {
    if (t.after.kind == K::Parabolic) add({grid[t.to]});
    else if (t.before.kind == K::Parabolic) add({grid[t.from]});
    else add({grid[t.from], grid[t.to]});
  }
  return out;
}

std::string TransitionScan::to_csv() const {
  std::ostringstream os;
  os << "t_squared,t_squared_approx";
  for (const auto& w : watched) {
    os << ",\"";
    for (size_t i = 0; i < w.size(); ++i) os << (i ? " " : "") << w[i];
    os << "\"";
  }
  os << '\n';
  os.precision(12);
  for (size_t g = 0; g < grid.size(); ++g) {
    os << grid[g].str() << ',' << grid[g].to_double();
    for (const auto& c : classes[g]) os << ',' << to_string(c);
    os << '\n';
  }
  return os.str();
}

TransitionScan transition_scan(const Arrangement& arr, const std::vector<std::vector<std::string>>& watched,
                               const std::vector<FieldElem>& grid) {
  TransitionScan out;
  out.watched = watched;
  out.grid = grid;
  for (const auto& r : grid) {
    Arrangement at = arr.with_parameter(Parameter::exact(r));
    std::vector<SubdiagramClass> row;
    for (const auto& w : watched) row.push_back(classify_subdiagram(at, w));
    out.classes.push_back(std::move(row));
  }
  for (size_t g = 1; g < grid.size(); ++g)
    for (size_t w = 0; w < watched.size(); ++w)
      if (!(out.classes[g][w] == out.classes[g - 1][w]))
        out.transitions.push_back({watched[w], g - 1, g, out.classes[g - 1][w], out.classes[g][w]});
  return out;
}

}  // namespace hyperdef
