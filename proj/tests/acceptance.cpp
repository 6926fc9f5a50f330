// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. All tolerances are exact counts.

#include <cstdio>
#include <string>
#include <vector>

#include "pospace/pospace.hpp"

using namespace pospace;

namespace {

  constexpr long long effectiveness_time_limit_ms = 60'000;

  // Σ 2^|X| over all labeled posets with |X| <= 3, counted from the generator.
  std::size_t expected_corelations() {
    std::size_t total = 0;
    for (auto const& p : enumerate_posets_up_to(3, true)) total += std::size_t{1} << p.size();
    return total;
  }

  VerificationReport run(std::string const& id, std::size_t max_n) {
    EnumerationBudget b;
    b.max_n       = max_n;
    b.parallelism = 1;
    return verify(id, b);
  }

  std::string first_failure(VerificationReport const& r) {
    if (r.failures.empty()) return "";
    return "; first: " + r.failures.front().axiom + " (" + r.failures.front().witness + ")";
  }

  std::string sequence(std::vector<std::size_t> const& v) {
    std::string s;
    for (auto x : v) s += (s.empty() ? "" : ",") + std::to_string(x);
    return s;
  }

  struct Line {
    int         id;
    std::string name;
    bool        pass;
    std::string detail;
  };

}  // namespace

int main() {
  std::vector<Line> lines;

  {
    auto r        = run("effectiveness", 3);
    auto expected = expected_corelations();
    bool ok       = r.passed() && r.instances == expected && r.elapsed_ms < effectiveness_time_limit_ms;
    lines.push_back({1, "effectiveness", ok,
                     std::to_string(r.instances) + "/" + std::to_string(expected) + " co-relations certified, "
                         + std::to_string(r.failures.size()) + " failures, " + std::to_string(r.elapsed_ms)
                         + " ms (limit " + std::to_string(effectiveness_time_limit_ms) + ")" + first_failure(r)});
  }
  {
    auto r  = run("corollary_bijection", 3);
    bool ok = r.passed() && r.instances == expected_corelations();
    lines.push_back({2, "corollary_bijection", ok,
                     std::to_string(r.instances) + " co-relations, " + std::to_string(r.failures.size())
                         + " failures" + first_failure(r)});
  }
  {
    auto r  = run("preo_quot", 3);
    bool ok = r.passed() && r.instances > 0;
    lines.push_back({3, "preo_quot", ok,
                     std::to_string(r.instances) + " pre-orders and surjections, " + std::to_string(r.failures.size())
                         + " failures" + first_failure(r)});
  }
  {
    auto r  = run("pushout_theta", 3);
    bool ok = r.passed() && r.instances > 0;
    lines.push_back({4, "pushout_theta", ok,
                     std::to_string(r.instances) + " embedding cospans, " + std::to_string(r.failures.size())
                         + " failures" + first_failure(r)});
  }
  {
    auto r  = run("cokernel_pair", 3);
    bool ok = r.passed() && r.instances == expected_corelations();
    lines.push_back({5, "cokernel_pair", ok,
                     std::to_string(r.instances) + " subsets, " + std::to_string(r.failures.size()) + " failures"
                         + first_failure(r)});
  }
  {
    auto r = run("counting", 4);
    std::vector<std::size_t> const posets{1, 1, 3, 19, 219};
    std::vector<std::size_t> const preorders{1, 1, 4, 29, 355};
    auto const&                    t  = r.tallies;
    bool ok = r.passed() && t.at("labeled_posets") == posets && t.at("labeled_posets_oracle") == posets
              && t.at("labeled_preorders") == preorders && t.at("labeled_preorders_oracle") == preorders;
    lines.push_back({6, "counting", ok,
                     "posets " + sequence(t.at("labeled_posets")) + " / oracle " + sequence(t.at("labeled_posets_oracle"))
                         + "; pre-orders " + sequence(t.at("labeled_preorders")) + " / oracle "
                         + sequence(t.at("labeled_preorders_oracle")) + first_failure(r)});
  }
  {
    // Unlabeled posets up to 5 points: the 63 five-point classes and all 25
    // smaller ones.
    auto b  = run("birkhoff", 5);
    auto d  = run("dual_contravariance", 3);
    auto by = b.tallies.at("unlabeled_posets");
    bool ok = b.passed() && d.passed() && by.size() == 6 && by[5] == 63 && d.instances > 0;
    lines.push_back({7, "birkhoff", ok,
                     std::to_string(b.instances) + " posets (by size " + sequence(by) + "), "
                         + std::to_string(d.instances) + " composable pairs, "
                         + std::to_string(b.failures.size() + d.failures.size()) + " failures" + first_failure(b)
                         + first_failure(d)});
  }
  {
    auto r  = run("negative_controls", 0);
    bool ok = r.passed() && r.instances == 4;
    lines.push_back({8, "negative_controls", ok,
                     std::to_string(r.instances) + " controls rejected as documented" + first_failure(r)});
  }
  {
    auto r  = run("separation", 5);
    bool ok = r.passed() && r.instances > 0;
    lines.push_back({9, "separation", ok,
                     std::to_string(r.instances) + " pairs x !<= y, " + std::to_string(r.failures.size()) + " failures"
                         + first_failure(r)});
  }

  bool all = true;
  for (auto const& l : lines) {
    std::printf("%s %d %s: %s\n", l.pass ? "PASS" : "FAIL", l.id, l.name.c_str(), l.detail.c_str());
    all = all && l.pass;
  }
  return all ? 0 : 1;
}
