#include "sgspec/search.hpp"

#include <algorithm>

#include "sgspec/error.hpp"

namespace sgspec {

namespace {

void subsets_containing_last(int n, int size, const std::function<void(std::vector<int>&)>& fn) {
  std::vector<int> pick(size);
  pick[size - 1] = n - 1;
  std::function<void(int, int)> rec = [&](int start, int depth) {
    if (depth == size - 1) {
      fn(pick);
      return;
    }
    for (int v = start; v < n - 1; ++v) {
      pick[depth] = v;
      rec(v + 1, depth + 1);
    }
  };
  if (size == 1) fn(pick);
  else rec(0, 0);
}

void all_subsets(int n, int size, const std::function<void(std::vector<int>&)>& fn) {
  std::vector<int> pick(size);
  std::function<void(int, int)> rec = [&](int start, int depth) {
    if (depth == size) {
      fn(pick);
      return;
    }
    for (int v = start; v < n; ++v) {
      pick[depth] = v;
      rec(v + 1, depth + 1);
    }
  };
  rec(0, 0);
}

void push_witness(std::vector<SignedGraph>& witnesses, const SignedGraph& canon, int cap) {
  if (static_cast<int>(witnesses.size()) >= cap) return;
  witnesses.push_back(canon);
}

}  // namespace

bool ForbiddenFamily::contains_member_induced(const SignedGraph& g) const {
  bool hit = false;
  for (int k = 1; k <= std::min(h, g.size()) && !hit; ++k) {
    all_subsets(g.size(), k, [&](std::vector<int>& s) {
      if (hit) return;
      if (keys.count(canonical_form(induced_subgraph(g, s)))) hit = true;
    });
  }
  return hit;
}

bool ForbiddenFamily::extension_hits(const SignedGraph& g) const {
  bool hit = false;
  for (int k = 1; k <= std::min(h, g.size()) && !hit; ++k) {
    subsets_containing_last(g.size(), k, [&](std::vector<int>& s) {
      if (hit) return;
      if (keys.count(canonical_form(induced_subgraph(g, s)))) hit = true;
    });
  }
  return hit;
}

std::optional<int> ForbiddenFamily::degree_cap_for(int p) const {
  if (h < floor_lambda_sq + 2) return std::nullopt;
  return static_cast<int>((p - 1) * floor_lambda_sq);
}

ForbiddenFamily forbidden_family(const Quad& lambda, int h) {
  if (h > 6) throw Error(Errc::LIMIT_EXCEEDED, "forbidden family capped at 6 vertices");
  ForbiddenFamily fam;
  fam.lambda = lambda;
  fam.h = h;
  fam.floor_lambda_sq = (lambda * lambda).floor().get_si();
  EnumConstraints c;
  enumerate_signed(h, c, [&](const SignedGraph& g, int) {
    if (compare_top_eigenvalue(g, lambda).cmp == TopCmp::GREATER) {
      fam.members.push_back(g);
      fam.keys.insert(canonical_form(g));
    }
  });
  return fam;
}

SearchReport spectral_radius_order(const Quad& lambda, int n_max, const SearchOptions& opt) {
  if (lambda.sign() <= 0) throw Error(Errc::BAD_PARAMS, "spectral radius order requires lambda > 0");
  SearchReport rep;
  rep.mode = SearchMode::K_ORDER;
  rep.lambda = lambda;
  rep.n_max = n_max;

  EnumConstraints c;
  c.unsigned_only = true;
  c.lambda1_max = lambda;
  c.no_pruning = opt.no_pruning;
  c.time_limit_sec = opt.time_limit_sec;
  LevelEnumerator en(c, n_max, opt.jobs);
  while (!en.done()) {
    const auto& reps = en.advance();
    for (const auto& g : reps) {
      if (c.no_pruning && !en.satisfies(g)) continue;
      if (opt.connected_only && !g.is_connected()) continue;
      if (multiplicity(g, lambda) >= 1) push_witness(rep.witnesses, g, opt.witness_cap);
    }
    if (!rep.witnesses.empty()) {
      rep.value = Rational(en.level());
      rep.k_lambda = en.level();
      break;
    }
  }
  rep.counters = en.counters();
  if (!rep.value) {
    rep.inconclusive = true;
    rep.notes = "no graph with spectral radius exactly lambda on up to " + std::to_string(n_max) + " vertices";
  }
  return rep;
}

SearchReport kp_search(const Quad& lambda, int p, int n_max, const SearchOptions& opt) {
  if (p < 1) throw Error(Errc::BAD_PARAMS, "p must be >= 1");
  SearchReport rep;
  rep.mode = SearchMode::KP_RATIO;
  rep.lambda = lambda;
  rep.p = p;
  rep.n_max = n_max;

  EnumConstraints c;
  c.chi_max = p;
  c.lambda1_max = lambda;
  c.no_pruning = opt.no_pruning;
  c.time_limit_sec = opt.time_limit_sec;

  std::optional<Rational> best;
  std::vector<SignedGraph> best_witnesses;
  rep.counters = enumerate_signed(n_max, c, [&](const SignedGraph& g, int level) {
    if (opt.connected_only && !g.is_connected()) return;
    const int mult = multiplicity(g, lambda);
    if (mult < 1) return;  // lambda_1 < lambda (PSD already enforced)
    Rational ratio(level, mult);
    ratio.canonicalize();
    if (!best || ratio < *best) {
      best = ratio;
      best_witnesses.clear();
      push_witness(best_witnesses, g, opt.witness_cap);
    } else if (ratio == *best) {
      push_witness(best_witnesses, g, opt.witness_cap);
    }
  }, opt.jobs);
  rep.value = best;
  rep.witnesses = std::move(best_witnesses);

  // Cor-4.4-style cross-check: k_p(lambda) >= p*k/(p*k - 2*lambda) for p >= 2.
  if (p >= 2) {
    SearchOptions korder = opt;
    korder.no_pruning = false;
    SearchReport k = spectral_radius_order(lambda, n_max, korder);
    if (k.value) {
      rep.k_lambda = static_cast<int>(k.value->get_num().get_si());
      Quad pk = Quad(Rational(*k.value * p));
      Quad denom = pk - Quad(2) * lambda;
      if (denom.sign() > 0) rep.cor44_lower = pk / denom;
    }
  }
  if (!rep.value) rep.notes = "no witness with top eigenvalue exactly lambda within range";
  return rep;
}

SearchReport verify_mult_bound(const Quad& lambda, int p, int n_max, const Rational& coeff,
                               const SearchOptions& opt) {
  SearchReport rep;
  rep.mode = SearchMode::BOUND_VERIFY;
  rep.lambda = lambda;
  rep.p = p;
  rep.n_max = n_max;
  rep.value = coeff;

  EnumConstraints c;
  c.chi_max = p;
  c.no_pruning = opt.no_pruning;
  c.time_limit_sec = opt.time_limit_sec;

  bool pass_connected = true;
  rep.counters = enumerate_signed(n_max, c, [&](const SignedGraph& g, int level) {
    if (opt.connected_only && !g.is_connected()) return;
    const int mult = multiplicity(g, lambda);
    // violation iff mult > coeff * n
    if (Rational(mult) > coeff * Rational(level)) {
      rep.pass = false;
      if (!g.is_connected()) {
        // keep note precision: a disconnected violation implies one in a component
      } else {
        pass_connected = false;
      }
      push_witness(rep.witnesses, g, opt.witness_cap);
    }
  }, opt.jobs);
  rep.notes = rep.pass ? "holds for all classes (connected and disconnected readings agree)"
                       : (pass_connected ? "violations are disconnected only" : "violated by connected classes");
  return rep;
}

SearchReport verify_mult_bound_reduction(const SearchOptions& opt) {
  SearchReport rep;
  rep.mode = SearchMode::BOUND_VERIFY;
  rep.lambda = Quad::sqrt_of(3);
  rep.p = 3;
  rep.n_max = 8;
  rep.value = Rational(3, 7);
  rep.pass = true;

  // A violation of mult <= 3n/7 with chi <= 3 on n <= 8 forces
  // mult(sqrt3) = mult(-sqrt3) = n/2, i.e. A^2 = 3I, so the underlying graph
  // is cubic and n is 4, 6 or 8. Disconnected candidates reduce to their
  // components (mult and n are additive), and the only split, 4+4, needs a
  // 4-vertex witness, so connected cubic graphs cover everything.
  const int expected_counts[3] = {1, 2, 5};
  const int orders[3] = {4, 6, 8};
  long long signings_checked = 0;
  std::string counts_note = "connected cubic graphs:";
  for (int oi = 0; oi < 3; ++oi) {
    const int n = orders[oi];
    EnumConstraints c;
    c.unsigned_only = true;
    c.degree_cap = 3;
    c.time_limit_sec = opt.time_limit_sec;
    std::vector<Graph> cubics;
    enumerate_signed(n, c, [&](const SignedGraph& g, int level) {
      if (level != n) return;
      if (!g.is_connected()) return;
      for (int v = 0; v < n; ++v)
        if (g.degree(v) != 3) return;
      cubics.push_back(underlying(g));
    }, opt.jobs);
    counts_note += " n=" + std::to_string(n) + ":" + std::to_string(cubics.size());
    if (static_cast<int>(cubics.size()) != expected_counts[oi]) {
      rep.pass = false;
      rep.notes = "internal enumeration mismatch: expected " + std::to_string(expected_counts[oi]) +
                  " cubic graphs on " + std::to_string(n) + ", found " + std::to_string(cubics.size());
      return rep;
    }

    for (const Graph& base : cubics) {
      const auto& edges = base.edges();
      const int m = static_cast<int>(edges.size());
      for (long long mask = 0; mask < (1LL << m); ++mask) {
        ++signings_checked;
        std::vector<SignedEdge> se;
        se.reserve(m);
        for (int b = 0; b < m; ++b)
          se.push_back({edges[b].first, edges[b].second, (mask >> b & 1) ? +1 : -1});
        SignedGraph sg(n, std::move(se));
        // A^2 = 3I: diagonal is automatic (cubic); check off-diagonal cancellation
        bool ok = true;
        for (int u = 0; u < n && ok; ++u)
          for (int v = u + 1; v < n && ok; ++v) {
            int acc = 0;
            for (int w = 0; w < n; ++w) acc += sg.sign(u, w) * sg.sign(w, v);
            if (acc != 0) ok = false;
          }
        if (!ok) continue;
        auto col = chromatic_number(sg);
        if (col.finite && col.chi <= 3) {
          rep.pass = false;
          push_witness(rep.witnesses, canonical_relabel(sg), opt.witness_cap);
        }
      }
    }
  }
  rep.counters.candidates = signings_checked;
  if (rep.notes.empty())
    rep.notes = (rep.pass ? "no signing with A^2 = 3I and chi <= 3; " : "counterexample signing found; ") +
                counts_note;
  return rep;
}

SearchReport compute_M(const Quad& lambda, int p, int N, const ForbiddenFamily& family,
                       const SearchOptions& opt) {
  SearchReport rep;
  rep.mode = SearchMode::M_VALUE;
  rep.lambda = lambda;
  rep.p = p;
  rep.n_max = N;

  EnumConstraints c;
  c.chi_max = p;
  c.tail_bound = {{p + 1, lambda}};
  c.no_pruning = opt.no_pruning;
  c.time_limit_sec = opt.time_limit_sec;
  if (!family.empty()) {
    c.degree_cap = family.degree_cap_for(p);
    c.hereditary_filter = [&family](const SignedGraph& g) { return !family.extension_hits(g); };
  }

  int best = 0;
  std::vector<SignedGraph> best_witnesses;
  rep.counters = enumerate_signed(N, c, [&](const SignedGraph& g, int) {
    if (opt.connected_only && !g.is_connected()) return;
    const int mult = multiplicity(g, lambda);
    if (mult > best) {
      best = mult;
      best_witnesses.clear();
      push_witness(best_witnesses, g, opt.witness_cap);
    } else if (mult == best && mult > 0) {
      push_witness(best_witnesses, g, opt.witness_cap);
    }
  }, opt.jobs);
  rep.value = Rational(best);
  rep.witnesses = std::move(best_witnesses);
  return rep;
}

}  // namespace sgspec
