#include "hcn/partition.hpp"

#include <stdexcept>
#include <string>

namespace hcn {

Partition::Partition(std::size_t num_cellular, std::vector<std::size_t> assignment)
    : num_cellular_(num_cellular), assignment_(std::move(assignment))
{
    for (std::size_t d = 0; d < assignment_.size(); ++d) {
        if (assignment_[d] > num_cellular_) {
            throw std::invalid_argument("pair " + std::to_string(d) + " assigned to coalition "
                                        + std::to_string(assignment_[d]) + ", only "
                                        + std::to_string(num_cellular_ + 1) + " exist");
        }
    }
}

Partition Partition::uniform(std::size_t num_cellular, std::size_t num_d2d, std::size_t coalition)
{
    return Partition(num_cellular, std::vector<std::size_t>(num_d2d, coalition));
}

std::vector<std::size_t> Partition::members(std::size_t coalition) const
{
    if (coalition > num_cellular_) {
        throw std::invalid_argument("coalition id out of range");
    }
    std::vector<std::size_t> out;
    for (std::size_t d = 0; d < assignment_.size(); ++d) {
        if (assignment_[d] == coalition) {
            out.push_back(d);
        }
    }
    return out;
}

std::vector<std::vector<std::size_t>> Partition::coalitions() const
{
    std::vector<std::vector<std::size_t>> out(num_coalitions());
    for (std::size_t d = 0; d < assignment_.size(); ++d) {
        out[assignment_[d]].push_back(d);
    }
    return out;
}

Partition Partition::with_assignment(std::size_t d, std::size_t coalition) const
{
    if (d >= assignment_.size()) {
        throw std::invalid_argument("D2D index out of range");
    }
    if (coalition > num_cellular_) {
        throw std::invalid_argument("coalition id out of range");
    }
    Partition copy = *this;
    copy.assignment_[d] = coalition;
    return copy;
}

}  // namespace hcn
