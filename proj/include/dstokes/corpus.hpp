#pragma once

#include <string>
#include <vector>

namespace dstokes::corpus {

struct Entry {
    std::string name;
    std::string text; // diagram or movie source, with geometry payload
};

/// Curve diagrams shipped with the engine. Every entry carries coordinate
/// records so the geometric numbering oracle can replay it.
const std::vector<Entry>& curves();

/// Slice movies shipped with the engine.
const std::vector<Entry>& movies();

const Entry& curve(const std::string& name);
const Entry& movie(const std::string& name);

} // namespace dstokes::corpus
