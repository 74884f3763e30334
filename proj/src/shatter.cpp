#include "vclines/shatter.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace vclines {

TraceFamily::TraceFamily(int n, std::vector<Mask> classes) : n_(n), classes_(std::move(classes)) {
  if (n < 0 || n > 31) throw std::invalid_argument("trace family ground size out of range");
  std::sort(classes_.begin(), classes_.end(), subset_lex_less);
  classes_.erase(std::unique(classes_.begin(), classes_.end()), classes_.end());
  for (Mask c : classes_)
    if (popcount(c) < 2 || (c & ~full_mask(n)) != 0)
      throw std::invalid_argument("trace class must have >= 2 ground elements");
  through_.assign(n, {});
  for (int ci = 0; ci < static_cast<int>(classes_.size()); ++ci)
    for (int p : mask_indices(classes_[ci])) through_[p].push_back(ci);
}

Mask TraceFamily::code_trace(int code) const {
  return code < 0 ? bit(singleton_point(code)) : classes_.at(code);
}

bool TraceFamily::cover_rec(Mask remaining, int k, Mask target) const {
  if (remaining == 0) return true;
  if (popcount(remaining) <= k) return true;  // singletons finish the job
  if (k == 0) return false;
  int p = lowest_bit(remaining);
  for (int ci : through_[p]) {
    Mask c = classes_[ci];
    if ((c & ~target) == 0 && cover_rec(remaining & ~c, k - 1, target)) return true;
  }
  return cover_rec(remaining & ~bit(p), k - 1, target);
}

bool TraceFamily::isolable(Mask target, int k) const {
  if (k < 0) return target == 0;
  return cover_rec(target, k, target);
}

std::optional<std::vector<int>> TraceFamily::isolation_cover(Mask target, int max_classes) const {
  struct Cand {
    Mask trace;
    int code;
  };
  std::vector<Cand> cands;
  for (int p : mask_indices(target)) cands.push_back({bit(p), singleton_code(p)});
  for (int ci = 0; ci < static_cast<int>(classes_.size()); ++ci)
    if ((classes_[ci] & ~target) == 0) cands.push_back({classes_[ci], ci});
  std::sort(cands.begin(), cands.end(),
            [](const Cand& a, const Cand& b) { return subset_lex_less(a.trace, b.trace); });

  int max_sz = 1;
  for (const Cand& c : cands) max_sz = std::max(max_sz, popcount(c.trace));

  std::vector<int> chosen;
  auto dfs = [&](auto&& self, size_t start, Mask remaining, int budget) -> bool {
    if (remaining == 0) return true;
    if (popcount(remaining) > budget * max_sz) return false;
    for (size_t i = start; i < cands.size(); ++i) {
      if ((cands[i].trace & remaining) == 0) continue;
      chosen.push_back(cands[i].code);
      if (self(self, i + 1, remaining & ~cands[i].trace, budget - 1)) return true;
      chosen.pop_back();
    }
    return false;
  };

  for (int budget = 0; budget <= max_classes; ++budget) {
    chosen.clear();
    if (dfs(dfs, 0, target, budget)) return chosen;
  }
  return std::nullopt;
}

std::optional<Mask> TraceFamily::first_unisolable(int k) const {
  auto rec = [&](auto&& self, Mask cur, int last) -> std::optional<Mask> {
    if (!isolable(cur, k)) return cur;
    for (int next = last + 1; next < n_; ++next)
      if (auto r = self(self, cur | bit(next), next)) return r;
    return std::nullopt;
  };
  return rec(rec, 0, -1);
}

int TraceFamily::min_cover_size() const {
  Mask all = full_mask(n_);
  for (int j = 0;; ++j)
    if (isolable(all, j)) return j;
}

TraceFamily family_of(const PointConfig& cfg) {
  std::vector<Mask> classes;
  classes.reserve(cfg.lines().size());
  for (const auto& lt : cfg.lines()) classes.push_back(lt.trace);
  return TraceFamily(cfg.size(), std::move(classes));
}

namespace {

LineClass code_to_class(const PointConfig& cfg, const TraceFamily& fam, int code) {
  return class_for_trace(cfg, fam.code_trace(code));
}

int default_size_limit() {
  if (const char* env = std::getenv("VCLINES_MAX_POINTS")) {
    int v = std::atoi(env);
    if (v > 0) return std::min(v, PointConfig::kMaxPoints);
  }
  return 16;
}

}  // namespace

bool isolable(const PointConfig& cfg, Mask target, int k) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if ((target & ~cfg.all()) != 0) throw std::invalid_argument("target is not a subset of the config");
  return family_of(cfg).isolable(target, k);
}

std::optional<IsolationWitness> isolate(const PointConfig& cfg, Mask target, int k) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if ((target & ~cfg.all()) != 0) throw std::invalid_argument("target is not a subset of the config");
  TraceFamily fam = family_of(cfg);
  auto codes = fam.isolation_cover(target, k);
  if (!codes) return std::nullopt;
  IsolationWitness w;
  w.target = target;
  for (int code : *codes) w.classes.push_back(code_to_class(cfg, fam, code));
  return w;
}

ShatterReport shatters(const PointConfig& cfg, int k, bool want_witnesses, int size_limit) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (size_limit <= 0) size_limit = default_size_limit();
  if (cfg.size() > size_limit)
    throw std::invalid_argument("config exceeds shatter size limit of " + std::to_string(size_limit) +
                                " points (override with VCLINES_MAX_POINTS or --limit)");
  ShatterReport rep;
  rep.k = k;
  rep.n = cfg.size();
  TraceFamily fam = family_of(cfg);
  rep.failing_subset = fam.first_unisolable(k);
  rep.shattered = !rep.failing_subset.has_value();
  if (want_witnesses && rep.shattered) {
    rep.witnesses.emplace();
    Mask all = cfg.all();
    for (Mask a = 0;; ++a) {
      auto codes = fam.isolation_cover(a, k);
      IsolationWitness w;
      w.target = a;
      for (int code : *codes) w.classes.push_back(code_to_class(cfg, fam, code));
      rep.witnesses->emplace_back(a, std::move(w));
      if (a == all) break;
    }
    std::sort(rep.witnesses->begin(), rep.witnesses->end(),
              [](const auto& x, const auto& y) { return subset_lex_less(x.first, y.first); });
  }
  return rep;
}

std::pair<int, Mask> max_shattered_subset(const PointConfig& cfg, int k, int size_limit) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (size_limit <= 0) size_limit = default_size_limit();
  if (cfg.size() > size_limit)
    throw std::invalid_argument("config exceeds shatter size limit of " + std::to_string(size_limit) +
                                " points");
  TraceFamily fam = family_of(cfg);
  int n = cfg.size();
  for (int m = n; m >= 0; --m) {
    // m-subsets in lexicographic order
    std::vector<int> idx(m);
    for (int i = 0; i < m; ++i) idx[i] = i;
    while (true) {
      Mask s = 0;
      for (int i : idx) s |= bit(i);
      std::vector<Mask> restricted;
      for (Mask c : fam.classes()) {
        Mask t = c & s;
        if (popcount(t) >= 2) restricted.push_back(compress_mask(t, s));
      }
      if (TraceFamily(m, std::move(restricted)).shatters(k)) return {m, s};
      // next combination
      int i = m - 1;
      while (i >= 0 && idx[i] == n - m + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < m; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return {0, 0};
}

}  // namespace vclines
