#pragma once

#include <cstddef>
#include <vector>

namespace hcn {

/// Assignment of every D2D pair to one of C + 1 coalitions.
///
/// Coalition ids are 0-based: 0 .. C-1 share the uplink of the cellular user
/// with the same index, id C is the mmWave band. Disjointness and coverage
/// hold by construction since each pair carries exactly one id.
class Partition {
public:
    Partition() = default;

    /// Throws std::invalid_argument if any id exceeds num_cellular.
    Partition(std::size_t num_cellular, std::vector<std::size_t> assignment);

    /// Every pair in the same coalition.
    static Partition uniform(std::size_t num_cellular, std::size_t num_d2d, std::size_t coalition);

    std::size_t num_cellular() const { return num_cellular_; }
    std::size_t num_d2d() const { return assignment_.size(); }
    std::size_t num_coalitions() const { return num_cellular_ + 1; }
    std::size_t mmwave_coalition() const { return num_cellular_; }
    bool is_mmwave(std::size_t coalition) const { return coalition == num_cellular_; }

    std::size_t coalition_of(std::size_t d) const { return assignment_.at(d); }
    const std::vector<std::size_t>& assignment() const { return assignment_; }

    /// Members of one coalition in ascending order.
    std::vector<std::size_t> members(std::size_t coalition) const;
    /// Members of every coalition, indexed by id, each ascending.
    std::vector<std::vector<std::size_t>> coalitions() const;

    /// Returns a copy with pair d moved to `coalition`.
    Partition with_assignment(std::size_t d, std::size_t coalition) const;

    bool operator==(const Partition&) const = default;

private:
    std::size_t num_cellular_ = 0;
    std::vector<std::size_t> assignment_;
};

}  // namespace hcn
