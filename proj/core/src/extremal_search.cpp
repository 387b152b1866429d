#include "spokecycles/extremal_search.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <map>
#include <span>
#include <stdexcept>

#include "spokecycles/connectivity.hpp"
#include "spokecycles/graph6.hpp"
#include "spokecycles/h2n.hpp"
#include "spokecycles/isomorphism.hpp"
#include "spokecycles/oracle.hpp"
#include "spokecycles/parallel.hpp"

namespace spokecycles {

std::string_view to_string(Objective objective) {
  return objective == Objective::min ? "min" : "max";
}

Objective parse_objective(std::string_view text) {
  if (text == "min") return Objective::min;
  if (text == "max") return Objective::max;
  throw std::invalid_argument("objective must be min or max");
}

namespace {

using Mask = std::uint64_t;

void check_search_size(int vertex_count, int max_vertices) {
  if (vertex_count < 6 || vertex_count % 2 != 0) {
    throw std::invalid_argument("search needs an even vertex count >= 6");
  }
  if (vertex_count > max_vertices) {
    throw CapExceeded("vertex count " + std::to_string(vertex_count) + " exceeds the cap of " +
                      std::to_string(max_vertices));
  }
  if (vertex_count > 62) throw CapExceeded("search supports at most 62 vertices");
}

bool cycle_adjacent(Vertex u, Vertex w, int n) {
  const int d = u > w ? u - w : w - u;
  return d == 1 || d == n - 1;
}

// A fixed prefix of the matching: the partners chosen for the two lowest
// vertices. Prefixes are listed in enumeration order.
struct Prefix {
  std::vector<std::pair<Vertex, Vertex>> pairs;
};

class MatchingWalker {
 public:
  explicit MatchingWalker(int n) : n_(n), partner_(static_cast<std::size_t>(n), -1) {}

  template <typename Visit>
  void run(const Prefix& prefix, Visit&& visit) {
    Mask unmatched = (n_ == 64 ? ~Mask{0} : (Mask{1} << n_) - 1);
    for (auto [a, b] : prefix.pairs) {
      partner_[static_cast<std::size_t>(a)] = b;
      partner_[static_cast<std::size_t>(b)] = a;
      unmatched &= ~((Mask{1} << a) | (Mask{1} << b));
    }
    extend(unmatched, visit);
  }

 private:
  template <typename Visit>
  void extend(Mask unmatched, Visit& visit) {
    if (unmatched == 0) {
      visit(std::span<const Vertex>(partner_));
      return;
    }
    const Vertex u = std::countr_zero(unmatched);
    const Mask rest = unmatched & (unmatched - 1);
    for (Mask m = rest; m != 0; m &= m - 1) {
      const Vertex w = std::countr_zero(m);
      if (cycle_adjacent(u, w, n_)) continue;
      partner_[static_cast<std::size_t>(u)] = w;
      partner_[static_cast<std::size_t>(w)] = u;
      extend(rest & ~(Mask{1} << w), visit);
    }
  }

  int n_;
  std::vector<Vertex> partner_;
};

std::vector<Prefix> matching_prefixes(int n) {
  std::vector<Prefix> out;
  for (Vertex a = 2; a <= n - 2; ++a) {
    // Lowest unmatched vertex after pairing 0 is 1 (a >= 2).
    for (Vertex b = 3; b < n; ++b) {
      if (b == a) continue;
      out.push_back({{{0, a}, {1, b}}});
    }
  }
  return out;
}

struct TaskResult {
  ClassScan scan;
  bool have_best = false;
  CycleCount best = 0;
  std::vector<std::vector<Vertex>> witnesses;
  bool have_oracle = false;
  CycleCount oracle_best = 0;
};

bool better(Objective objective, CycleCount a, CycleCount b) {
  return objective == Objective::min ? a < b : a > b;
}

CycleCount ceil_div(CycleCount a, CycleCount b) { return (a + b - 1) / b; }

}  // namespace

ClassScan for_each_class_member(int vertex_count,
                                const std::function<void(const ChordedCycleGraph&)>& visit,
                                int max_vertices) {
  check_search_size(vertex_count, max_vertices);
  ClassScan scan;
  MatchingWalker walker(vertex_count);
  for (const Prefix& prefix : matching_prefixes(vertex_count)) {
    walker.run(prefix, [&](std::span<const Vertex> partner) {
      ++scan.matchings_scanned;
      if (!is_three_connected_chorded(partner)) {
        ++scan.filtered_not_3conn;
        return;
      }
      visit(ChordedCycleGraph::from_partners(partner));
    });
  }
  return scan;
}

std::vector<ChordedCycleGraph> enumerate_class(int vertex_count, int max_vertices) {
  std::vector<ChordedCycleGraph> out;
  for_each_class_member(
      vertex_count, [&](const ChordedCycleGraph& g) { out.push_back(g); }, max_vertices);
  return out;
}

SearchReport find_extremal(int vertex_count, Objective objective, const SearchOptions& options) {
  check_search_size(vertex_count, options.max_vertices);
  const auto started = std::chrono::steady_clock::now();
  const int half = vertex_count / 2;
  const H2nGraph h = construct_h2n(half);

  SearchReport report;
  report.vertex_count = vertex_count;
  report.objective = objective;
  report.h2n_count = closed_form_c(half).convert_to<CycleCount>();
  report.two_connected_bound =
      ceil_div(static_cast<CycleCount>(vertex_count) * static_cast<CycleCount>(vertex_count + 14),
               8);
  report.oracle_check = options.oracle_check;

  // H_V is a class member, so its count bounds the minimum from above.
  const bool seeded = objective == Objective::min && options.prune && h.three_connected;
  const CycleCount seed = seeded ? detail::count_cycles_bounded(h.graph.partners(),
                                                                std::numeric_limits<CycleCount>::max())
                                 : 0;

  const std::vector<Prefix> prefixes = matching_prefixes(vertex_count);
  std::vector<TaskResult> results(prefixes.size());
  run_tasks(prefixes.size(), options.jobs, [&](std::size_t t) {
    TaskResult& r = results[t];
    MatchingWalker walker(vertex_count);
    CycleCount limit = seeded ? seed : std::numeric_limits<CycleCount>::max();
    walker.run(prefixes[t], [&](std::span<const Vertex> partner) {
      ++r.scan.matchings_scanned;
      if (!is_three_connected_chorded(partner)) {
        ++r.scan.filtered_not_3conn;
        return;
      }
      if (options.oracle_check == OracleCheck::full) {
        const CycleCount oc =
            count_all_cycles(to_simple(ChordedCycleGraph::from_partners(partner)),
                             {.max_vertices = vertex_count, .jobs = 1});
        if (!r.have_oracle || better(objective, oc, r.oracle_best)) r.oracle_best = oc;
        r.have_oracle = true;
      }
      const CycleCount count = detail::count_cycles_bounded(
          partner, objective == Objective::min ? limit : std::numeric_limits<CycleCount>::max());
      if (r.have_best && better(objective, r.best, count)) return;
      if (objective == Objective::min && count > limit) return;
      if (!r.have_best || better(objective, count, r.best)) {
        r.best = count;
        r.have_best = true;
        r.witnesses.clear();
        if (objective == Objective::min && options.prune) limit = count;
      }
      r.witnesses.emplace_back(partner.begin(), partner.end());
    });
  });

  bool have_best = false;
  for (const TaskResult& r : results) {
    report.matchings_scanned += r.scan.matchings_scanned;
    report.filtered_not_3conn += r.scan.filtered_not_3conn;
    if (r.have_best && (!have_best || better(objective, r.best, report.extremal_value))) {
      report.extremal_value = r.best;
      have_best = true;
    }
    if (r.have_oracle) {
      if (!report.oracle_extremal_value ||
          better(objective, r.oracle_best, *report.oracle_extremal_value)) {
        report.oracle_extremal_value = r.oracle_best;
      }
    }
  }
  if (!have_best) throw std::logic_error("no 3-connected member found");

  std::vector<const std::vector<Vertex>*> witnesses;
  for (const TaskResult& r : results) {
    if (!r.have_best || r.best != report.extremal_value) continue;
    for (const auto& w : r.witnesses) witnesses.push_back(&w);
  }
  report.witness_count = witnesses.size();
  {
    std::vector<std::vector<Vertex>> diagrams;
    diagrams.reserve(witnesses.size());
    for (const auto* w : witnesses) diagrams.push_back(dihedral_canonical(*w));
    std::sort(diagrams.begin(), diagrams.end());
    report.extremal_diagrams = static_cast<std::uint64_t>(
        std::unique(diagrams.begin(), diagrams.end()) - diagrams.begin());
  }

  struct Keyed {
    CanonicalForm form;
    std::string g6;
  };
  std::vector<Keyed> keyed(witnesses.size());
  run_tasks(witnesses.size(), options.jobs, [&](std::size_t i) {
    const SimpleGraph g = to_simple(ChordedCycleGraph::from_partners(*witnesses[i]));
    keyed[i] = {canonical_form(g), graph6_encode(g)};
  });
  std::map<CanonicalForm, std::string> classes;
  for (Keyed& k : keyed) {
    auto [it, inserted] = classes.emplace(std::move(k.form), k.g6);
    if (!inserted && k.g6 < it->second) it->second = k.g6;
  }
  const CanonicalForm h_form = canonical_form(to_simple(h.graph));
  report.contains_h2n = classes.contains(h_form);
  for (const auto& [form, g6] : classes) report.extremal_classes.push_back(g6);
  std::sort(report.extremal_classes.begin(), report.extremal_classes.end());

  if (options.oracle_check != OracleCheck::none) {
    for (const std::string& g6 : report.extremal_classes) {
      const CycleCount oc =
          count_all_cycles(graph6_decode(g6), {.max_vertices = vertex_count, .jobs = 1});
      if (oc != report.extremal_value) report.oracle_agrees = false;
    }
    if (report.oracle_extremal_value && *report.oracle_extremal_value != report.extremal_value) {
      report.oracle_agrees = false;
    }
  }

  report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - started);
  return report;
}

std::vector<Vertex> dihedral_canonical(std::span<const Vertex> partner) {
  const int n = static_cast<int>(partner.size());
  std::vector<Vertex> best(partner.begin(), partner.end());
  std::vector<Vertex> image(partner.size());
  for (int shift = 0; shift < n; ++shift) {
    for (int dir : {1, -1}) {
      auto map = [&](Vertex v) { return ((dir * (v - shift)) % n + n) % n; };
      for (int i = 0; i < n; ++i) {
        image[static_cast<std::size_t>(map(i))] = map(partner[static_cast<std::size_t>(i)]);
      }
      if (image < best) best = image;
    }
  }
  return best;
}

bool conjecture_holds(const SearchReport& report) {
  return report.objective == Objective::min && report.extremal_value == report.h2n_count &&
         report.contains_h2n;
}

bool verify_conjecture(int vertex_count, const SearchOptions& options) {
  return conjecture_holds(find_extremal(vertex_count, Objective::min, options));
}

}  // namespace spokecycles
