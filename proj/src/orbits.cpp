#include "orbitforge/orbits.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <functional>
#include <numeric>
#include <sstream>
#include <thread>
#include <unordered_map>

#include <boost/container_hash/hash.hpp>

#include "orbitforge/errors.hpp"
#include "orbitforge/trigfields.hpp"

namespace orbitforge::orbits {

using hyperbolic::kTwoPi;
using representation::Representation;

const char* to_string(Status s) { return s == Status::Finite ? "Finite" : "Exhausted"; }

double grid_for(double tol) {
  if (!(tol > 0.0)) throw DomainError("tolerance must be positive");
  double m = std::floor(kTwoPi / (8.0 * tol));
  if (m < 1.0) m = 1.0;
  return kTwoPi / m;
}

namespace {

struct Quantized {
  std::vector<double> values;
  std::vector<bool> circular;
  std::vector<std::int64_t> cells;
  std::vector<double> offsets;  // position inside the cell, in [-0.5, 0.5)
};

Quantized quantize(const ActionAngle& c, double grid) {
  const auto modulus = static_cast<std::int64_t>(std::llround(kTwoPi / grid));
  Quantized q;
  auto push = [&](double v, bool circ) {
    double s = v / grid;
    double f = std::floor(s + 0.5);
    auto cell = static_cast<std::int64_t>(f);
    if (circ) cell = ((cell % modulus) + modulus) % modulus;
    q.values.push_back(v);
    q.circular.push_back(circ);
    q.cells.push_back(cell);
    q.offsets.push_back(s - f);
  };
  for (double b : c.beta) push(b, false);
  for (const auto& g : c.gamma) {
    if (g) push(hyperbolic::wrap_2pi(*g), true);
  }
  return q;
}

struct KeyHash {
  std::size_t operator()(const CanonicalKey& k) const {
    std::size_t h = boost::hash_range(k.cells.begin(), k.cells.end());
    boost::hash_combine(h, boost::hash_range(k.mask.begin(), k.mask.end()));
    return h;
  }
};

// Insert-if-absent map from coordinates to point indices. Points within tol are
// found by probing the neighbouring cell in each coordinate close to a cell edge.
class Index {
 public:
  Index(double tol, const std::vector<ActionAngle>* store) : tol_(tol), grid_(grid_for(tol)), store_(store) {
    modulus_ = static_cast<std::int64_t>(std::llround(kTwoPi / grid_));
  }

  std::optional<std::size_t> find(const ActionAngle& c) const {
    Quantized q = quantize(c, grid_);
    const double edge = 0.5 - tol_ / grid_ - 1e-12;
    std::vector<std::vector<std::int64_t>> options(q.cells.size());
    for (std::size_t k = 0; k < q.cells.size(); ++k) {
      options[k].push_back(q.cells[k]);
      if (std::abs(q.offsets[k]) > edge) {
        std::int64_t nb = q.cells[k] + (q.offsets[k] > 0 ? 1 : -1);
        if (q.circular[k]) nb = ((nb % modulus_) + modulus_) % modulus_;
        options[k].push_back(nb);
      }
    }
    CanonicalKey probe{q.cells, c.degenerate};
    std::optional<std::size_t> hit;
    std::function<void(std::size_t)> rec = [&](std::size_t k) {
      if (hit) return;
      if (k == options.size()) {
        auto it = map_.find(probe);
        if (it == map_.end()) return;
        for (std::size_t idx : it->second) {
          if (representation::coords_distance((*store_)[idx], c) <= tol_) {
            hit = idx;
            return;
          }
        }
        return;
      }
      for (auto cell : options[k]) {
        probe.cells[k] = cell;
        rec(k + 1);
      }
      probe.cells[k] = q.cells[k];
    };
    rec(0);
    return hit;
  }

  void insert(const ActionAngle& c, std::size_t idx) {
    map_[CanonicalKey{quantize(c, grid_).cells, c.degenerate}].push_back(idx);
  }

 private:
  double tol_;
  double grid_;
  std::int64_t modulus_;
  const std::vector<ActionAngle>* store_;
  std::unordered_map<CanonicalKey, std::vector<std::size_t>, KeyHash> map_;
};

struct Candidate {
  Representation rep;
  ActionAngle coords;
};

void expand(const std::vector<Representation>& reps, const std::vector<std::size_t>& frontier,
            const std::vector<TwistGen>& gens, unsigned threads, std::vector<Candidate>& out) {
  const std::size_t total = frontier.size() * gens.size();
  out.assign(total, Candidate{});
  auto work = [&](std::size_t lo, std::size_t hi) {
    for (std::size_t k = lo; k < hi; ++k) {
      const auto& parent = reps[frontier[k / gens.size()]];
      out[k].rep = representation::twist_algebraic(parent, gens[k % gens.size()]);
      out[k].coords = representation::coords_from_rep(out[k].rep);
    }
  };
  unsigned nt = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(total / 64 + 1)));
  if (nt == 1) {
    work(0, total);
    return;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(nt);
  std::size_t chunk = (total + nt - 1) / nt;
  for (unsigned t = 0; t < nt; ++t) {
    std::size_t lo = t * chunk;
    std::size_t hi = std::min(total, lo + chunk);
    pool.emplace_back([&, t, lo, hi] {
      try {
        work(lo, hi);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace

CanonicalKey canonicalize(const ActionAngle& coords, double tol) {
  return CanonicalKey{quantize(coords, grid_for(tol)).cells, coords.degenerate};
}

OrbitResult enumerate(const AngleVector& alpha, const ActionAngle& seed, const OrbitOptions& opts) {
  chains::validate_alpha(alpha);
  const int n = static_cast<int>(alpha.size());
  if (opts.max_points == 0) throw DomainError("max_points must be positive");
  std::vector<TwistGen> gens = opts.generators.empty() ? surface::generator_set(n) : opts.generators;
  for (const auto& g : gens) surface::check_gen(g, n);

  std::vector<Representation> reps;
  std::vector<ActionAngle> coords;
  std::vector<TwistWord> words;
  std::vector<int> found_at;
  Index index(opts.tol, &coords);

  reps.push_back(representation::from_coords(alpha, seed));
  coords.push_back(representation::coords_from_rep(reps.back()));
  words.emplace_back();
  found_at.push_back(0);
  index.insert(coords.back(), 0);

  OrbitResult res;
  res.layers.push_back(1);
  std::vector<std::size_t> frontier{0};
  std::vector<Candidate> cand;
  bool exhausted = false;
  for (int layer = 1; !frontier.empty(); ++layer) {
    if (layer > opts.max_layers) {
      exhausted = true;
      res.note = "layer limit " + std::to_string(opts.max_layers) + " reached";
      break;
    }
    expand(reps, frontier, gens, opts.threads, cand);
    std::vector<std::size_t> next;
    for (std::size_t k = 0; k < cand.size() && !exhausted; ++k) {
      if (index.find(cand[k].coords)) continue;
      std::size_t idx = reps.size();
      reps.push_back(std::move(cand[k].rep));
      coords.push_back(std::move(cand[k].coords));
      TwistWord w = words[frontier[k / gens.size()]];
      w.letters.push_back({gens[k % gens.size()], 1});
      words.push_back(std::move(w));
      found_at.push_back(layer);
      index.insert(coords.back(), idx);
      next.push_back(idx);
      if (reps.size() >= opts.max_points) {
        exhausted = true;
        res.note = "point limit " + std::to_string(opts.max_points) + " reached";
      }
    }
    res.layers.push_back(next.size());
    if (exhausted) break;
    frontier = std::move(next);
  }
  res.status = exhausted ? Status::Exhausted : Status::Finite;

  std::vector<CanonicalKey> keys;
  keys.reserve(coords.size());
  for (const auto& c : coords) keys.push_back(canonicalize(c, opts.tol));
  std::vector<std::size_t> order(coords.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return keys[a] < keys[b]; });
  for (std::size_t idx : order) res.points.push_back({coords[idx], words[idx], found_at[idx]});
  return res;
}

ActionAngle row_coords(const GoldenTable& t, const TableRow& r) {
  ActionAngle c;
  c.beta = r.beta;
  c.degenerate = chains::degeneracy_mask(t.alpha, r.beta);
  c.gamma.resize(r.gamma.size());
  for (std::size_t k = 0; k < r.gamma.size(); ++k) {
    if (r.gamma[k]) c.gamma[k] = hyperbolic::wrap_2pi(t.gamma_sign * *r.gamma[k]);
  }
  return c;
}

bool VerifyReport::ok() const {
  return replay_ok == rows && missing.empty() && extra.empty() && replay_failures.empty();
}

std::string VerifyReport::summary() const {
  std::ostringstream os;
  os << (ok() ? "OK" : "FAIL") << ": " << matched << "/" << rows << " rows matched, " << replay_ok << "/"
     << rows << " word replays";
  if (corrected_rows > 0) os << " (" << corrected_rows << " rows use corrected words)";
  if (!missing.empty()) os << ", " << missing.size() << " missing";
  if (!extra.empty()) os << ", " << extra.size() << " extra";
  return os.str();
}

namespace {

std::string describe(const ActionAngle& c) {
  std::ostringstream os;
  os.precision(6);
  os << "beta=(";
  for (std::size_t k = 0; k < c.beta.size(); ++k) os << (k ? "," : "") << c.beta[k] / hyperbolic::kPi << "pi";
  os << ") gamma=(";
  for (std::size_t k = 0; k < c.gamma.size(); ++k) {
    os << (k ? "," : "");
    if (c.gamma[k]) {
      os << *c.gamma[k] / hyperbolic::kPi << "pi";
    } else {
      os << "-";
    }
  }
  os << ")";
  return os.str();
}

void replay_into(const GoldenTable& table, VerifyReport& rep) {
  ActionAngle base = table.basepoint;
  for (auto& g : base.gamma) {
    if (g) g = hyperbolic::wrap_2pi(table.gamma_sign * *g);
  }
  base = chains::make_coords(table.alpha, base.beta, base.gamma);
  auto rho0 = representation::from_coords(table.alpha, base);
  rep.rows = table.rows.size();
  for (const auto& row : table.rows) {
    if (!row.word_as_printed.empty()) ++rep.corrected_rows;
    auto got = representation::coords_from_rep(representation::apply_word(rho0, row.word));
    auto want = row_coords(table, row);
    double d = representation::coords_distance(got, want);
    if (std::isfinite(d)) rep.max_replay_error = std::max(rep.max_replay_error, d);
    if (d <= table.tol) {
      ++rep.replay_ok;
    } else {
      rep.replay_failures.push_back(row.word_text + ": expected " + describe(want) + ", got " + describe(got));
    }
  }
}

}  // namespace

VerifyReport replay_table(const GoldenTable& table) {
  VerifyReport rep;
  replay_into(table, rep);
  return rep;
}

VerifyReport verify_against_table(const OrbitResult& result, const GoldenTable& table) {
  VerifyReport rep;
  replay_into(table, rep);
  std::vector<bool> used(result.points.size(), false);
  for (const auto& row : table.rows) {
    auto want = row_coords(table, row);
    bool hit = false;
    for (std::size_t k = 0; k < result.points.size(); ++k) {
      if (used[k]) continue;
      if (representation::coords_distance(result.points[k].coords, want) <= table.tol) {
        used[k] = true;
        hit = true;
        ++rep.matched;
        break;
      }
    }
    if (!hit) rep.missing.push_back(row.word_text + " " + describe(want));
  }
  for (std::size_t k = 0; k < result.points.size(); ++k) {
    if (!used[k]) rep.extra.push_back(surface::format_word(result.points[k].word) + " " + describe(result.points[k].coords));
  }
  return rep;
}

std::vector<chains::RationalAngle> admissible_betas() {
  std::vector<chains::RationalAngle> out{{2, 3}, {1, 1}, {4, 3}, {1, 2}, {3, 2}};
  for (int k = 1; k <= 4; ++k) out.emplace_back(2 * k, 5);
  for (int k = 1; k <= 6; ++k) out.emplace_back(2 * k, 7);
  return out;
}

MembershipReport beta_membership_check(const OrbitResult& result, double tol, int max_den) {
  MembershipReport rep;
  auto allowed = admissible_betas();
  for (const auto& p : result.points) {
    bool regular = std::none_of(p.coords.degenerate.begin(), p.coords.degenerate.end(), [](bool b) { return b; });
    if (!regular) continue;
    ++rep.regular_points;
    for (double b : p.coords.beta) {
      auto r = trigfields::recognize_rational_angle(b, max_den, tol);
      bool good = r && std::find(allowed.begin(), allowed.end(), *r) != allowed.end();
      if (!good) {
        ++rep.flagged;
        rep.details.push_back(surface::format_word(p.word) + ": beta " + std::to_string(b) +
                              (r ? " = " + r->str() + " not admissible" : " not a small rational multiple of pi"));
        break;
      }
    }
  }
  return rep;
}

}  // namespace orbitforge::orbits
