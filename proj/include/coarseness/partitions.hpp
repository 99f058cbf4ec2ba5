#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "coarseness/discrepancy.hpp"
#include "coarseness/islands.hpp"
#include "coarseness/rational.hpp"

namespace coarseness {

// Blocks partition {0..n-1}; each block is an island; hulls pairwise disjoint.
struct ConvexPartition {
    std::vector<Island> blocks;
};

struct PartitionViolation {
    enum class Kind { NotAPartition, NotAnIsland, HullsIntersect };
    Kind kind;
    int block_a = -1;
    int block_b = -1;
    std::string detail;
};

struct ValidationResult {
    std::optional<ConvexPartition> partition;
    std::optional<PartitionViolation> violation;
    bool ok() const { return partition.has_value(); }
};

ValidationResult validate_partition(const ColoredPointSet& ps,
                                    const std::vector<std::vector<int>>& blocks);

// Minimum disc over blocks.
int partition_disc(const ColoredPointSet& ps, const ConvexPartition& pi);

struct EnumLimits {
    int soft_limit = 10;  // refuse above this many points...
    int hard_limit = 12;  // ...never run above this many
};

// Every convex partition exactly once via restricted-growth-string enumeration
// with incremental island / hull-disjointness pruning. sink returns false to stop.
void enumerate_convex_partitions(const ColoredPointSet& ps,
                                 const std::function<bool(const ConvexPartition&)>& sink,
                                 const EnumLimits& limits = {});

struct CoarsenessResult {
    int value = 0;
    ConvexPartition witness;
    std::uint64_t partitions_examined = 0;
};

CoarsenessResult exact_coarseness(const ColoredPointSet& ps, const EnumLimits& limits = {});

// Constructive partitions from maximum-discrepancy islands, with the guaranteed
// lower bound on the partition discrepancy they certify.
struct ConstructedPartition {
    ConvexPartition partition;
    Rational guaranteed_bound;
};

// island must carry a 1-halfplane certificate; bound max{t/2, t - |r-b|}.
ConstructedPartition partition_from_1sep(const ColoredPointSet& ps, const Island& island);

// island must carry a certificate of at most 2 halfplanes; bound max{t/8, t/4 - |r-b|}.
ConstructedPartition partition_from_2sep(const ColoredPointSet& ps, const Island& island);

// Some block of pi with separability number <= 5, plus that number.
std::optional<std::pair<int, int>> find_5sep_block(const ColoredPointSet& ps,
                                                   const ConvexPartition& pi);

}  // namespace coarseness
