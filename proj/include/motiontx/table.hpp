#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace motiontx {

/// Multi-channel sequence: one column of per-frame values per named channel.
/// An empty channel list is legal and still carries a frame count.
struct PoseTable {
    std::vector<std::string> channel_names;
    std::vector<std::vector<double>> columns;
    std::size_t frames = 0;

    /// Throws InvalidArgument on ragged columns or empty names and
    /// DuplicateChannel on repeated names.
    void validate() const;

    std::size_t channel_count() const noexcept { return channel_names.size(); }
    /// Index of `name`, or channel_count() when absent.
    std::size_t find(const std::string& name) const noexcept;
};

} // namespace motiontx
