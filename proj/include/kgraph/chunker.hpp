#pragma once
// Splits a document into bounded fragments cut at line breaks or sentence
// ends, with proportional overlay context on both sides. All sizes and
// offsets count Unicode scalar values of the newline-normalized text.

#include <stdexcept>
#include <string>
#include <vector>

namespace kgraph {

struct ChunkConfig {
    std::size_t target_size = 5000;  // characters per fragment core
    double overlay_fraction = 0.1;   // of target_size, each side

    std::size_t overlay_size() const {
        return static_cast<std::size_t>(static_cast<double>(target_size) * overlay_fraction);
    }
    bool valid() const { return target_size >= 100 && overlay_fraction >= 0.0 && overlay_fraction < 0.5; }
};

struct Fragment {
    std::string doc_id;
    std::size_t index = 0;      // 0-based ordinal within the document
    std::size_t core_start = 0; // character offsets into the normalized document
    std::size_t core_end = 0;
    std::string text;           // overlay_prefix + core + overlay_suffix

    std::string origin_reference() const {
        return doc_id + "#" + std::to_string(index);
    }
};

class EmptyDocumentError : public std::runtime_error {
public:
    explicit EmptyDocumentError(const std::string& doc_id)
        : std::runtime_error("empty document: " + doc_id) {}
};

// Fragment cores tile the document exactly: contiguous, non-overlapping,
// first starts at 0, last ends at the document end. Each cut lands just
// after the last line break or sentence terminator ('.', '?', '!'
// followed by whitespace or end) within the trailing half of the window;
// if none exists, the cut is a hard cut at exactly target_size.
// Throws EmptyDocumentError when the normalized text is empty; throws
// std::invalid_argument on an invalid config.
std::vector<Fragment> split_document(const std::string& doc_id, std::string_view text,
                                     const ChunkConfig& cfg);

} // namespace kgraph
