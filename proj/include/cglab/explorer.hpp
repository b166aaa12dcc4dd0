#pragma once

// Exhaustive search over pairs (V, W) with bounded highest weight and
// multiplicity. Two implementations share one contract: `search_serial`
// walks the pair stream in order and is kept as the reference, `search`
// splits the index range across OpenMP threads and merges per-thread
// partial reports. Both produce identical reports.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cglab/inequality.hpp"
#include "cglab/rep.hpp"

namespace cglab {

enum class ParityMode { opposite_pure, same_pure, any };

std::string to_string(ParityMode mode);
/// Accepts "opposite_pure", "same_pure", "any"; throws PreconditionError.
ParityMode parse_parity_mode(const std::string& text);

struct SearchConstraints {
  int max_weight = 8;
  Mult max_mult = 3;
  ParityMode parity_mode = ParityMode::opposite_pure;
  std::optional<Mult> dim_diff_filter;  // keep pairs with dim V - dim W equal to this
  bool require_prop1_conditions = false;
  std::size_t extremes_cap = 100;
  bool collect_nonpositive = false;  // keep every d2 <= 0 pair for tabular output
};

using PairIndex = std::uint64_t;

/// The finite set of candidate pairs, addressable by index in enumeration
/// order: parity blocks in turn, and within a block lexicographic in
/// (V multiplicities, W multiplicities) with the lowest weight most
/// significant. Filters are not applied here; see `admits`.
class PairSpace {
 public:
  explicit PairSpace(const SearchConstraints& c);

  PairIndex size() const noexcept { return size_; }
  std::pair<Rep, Rep> at(PairIndex index) const;
  /// Constraint filters (dim difference, Young hypotheses, block duplicates).
  bool admits(PairIndex index, const Rep& v, const Rep& w) const;

 private:
  struct Block {
    std::vector<Weight> v_slots;
    std::vector<Weight> w_slots;
    PairIndex v_count = 1;
    PairIndex w_count = 1;
    PairIndex offset = 0;
    bool skip_zero_pair = false;  // (0, 0) already produced by an earlier block
  };

  Rep decode(PairIndex digits, const std::vector<Weight>& slots) const;

  SearchConstraints constraints_;
  std::vector<Block> blocks_;
  PairIndex size_ = 0;
};

/// Calls `visit(index, V, W)` for every admitted pair, in order.
void enumerate_pairs(const SearchConstraints& c,
                     const std::function<void(PairIndex, const Rep&, const Rep&)>& visit);

/// Profile plus the names of every proven bound the pair breaks (always
/// empty unless something is wrong).
struct Classification {
  InequalityProfile profile;
  std::vector<std::string> violated;
};

Classification classify_pair(const Rep& v, const Rep& w);

struct PairRecord {
  PairIndex index = 0;
  InequalityProfile profile;

  friend bool operator==(const PairRecord&, const PairRecord&) = default;
};

struct Violation {
  PairIndex index = 0;
  Rep v;
  Rep w;
  std::string bound;

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct Tally {
  std::uint64_t total = 0;
  std::uint64_t negative = 0;  // d2 < 0
  std::uint64_t zero = 0;
  std::uint64_t positive = 0;
  std::map<Mult, std::uint64_t> negative_by_dim_diff;
  std::map<Mult, std::uint64_t> zero_by_dim_diff;
  std::optional<Mult> min_d2;

  void merge(const Tally& other);
  friend bool operator==(const Tally&, const Tally&) = default;
};

inline constexpr const char* kReportSchema = "cglab-search-report/1";

struct SearchReport {
  SearchConstraints constraints;
  Tally tally;
  std::vector<PairRecord> extremes;     // most negative d2 first, capped
  std::vector<Violation> violations;    // must stay empty
  std::vector<PairRecord> nonpositive;  // only when collect_nonpositive

  /// Folds `other` in. Associative and commutative up to the final order,
  /// which is fixed by sort keys that never tie.
  void merge(SearchReport other);
  friend bool operator==(const SearchReport& a, const SearchReport& b) {
    return a.tally == b.tally && a.extremes == b.extremes && a.violations == b.violations &&
           a.nonpositive == b.nonpositive;
  }
};

/// Extremes order: (d2, dim V + dim W, enumeration index).
bool extreme_before(const PairRecord& a, const PairRecord& b);

SearchReport search_serial(const SearchConstraints& c);

/// OpenMP search; jobs <= 0 uses the runtime default.
SearchReport search(const SearchConstraints& c, int jobs = 0);

}  // namespace cglab
