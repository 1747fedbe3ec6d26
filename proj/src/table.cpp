#include "motiontx/table.hpp"

#include "motiontx/error.hpp"

#include <algorithm>
#include <unordered_set>

namespace motiontx {

void PoseTable::validate() const {
    if (columns.size() != channel_names.size()) {
        throw Error(ErrorCode::InvalidArgument, "column count does not match channel names");
    }
    std::unordered_set<std::string> seen;
    for (std::size_t c = 0; c < channel_names.size(); ++c) {
        if (channel_names[c].empty()) {
            throw Error(ErrorCode::InvalidArgument, "channel " + std::to_string(c) + " has an empty name");
        }
        if (!seen.insert(channel_names[c]).second) {
            throw Error(ErrorCode::DuplicateChannel, "channel '" + channel_names[c] + "' appears twice");
        }
        if (columns[c].size() != frames) {
            throw Error(ErrorCode::InvalidArgument, "channel '" + channel_names[c] + "' has " +
                                                        std::to_string(columns[c].size()) + " frames, expected " +
                                                        std::to_string(frames));
        }
    }
}

std::size_t PoseTable::find(const std::string& name) const noexcept {
    return static_cast<std::size_t>(
        std::find(channel_names.begin(), channel_names.end(), name) - channel_names.begin());
}

} // namespace motiontx
