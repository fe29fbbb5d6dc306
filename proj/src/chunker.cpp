#include "kgraph/chunker.hpp"

#include "kgraph/textnorm.hpp"

#include <algorithm>

namespace kgraph {

namespace {

// True when a cut may land just after position pos (0-based, cut position
// = pos + 1): either a line break at pos, or a sentence terminator at pos
// followed by whitespace or the document end.
bool cut_after(const std::u32string& text, std::size_t pos) {
    char32_t c = text[pos];
    if (c == U'\n') return true;
    if (!text::is_sentence_terminator(c)) return false;
    return pos + 1 == text.size() || text::is_space(text[pos + 1]);
}

} // namespace

std::vector<Fragment> split_document(const std::string& doc_id, std::string_view raw,
                                     const ChunkConfig& cfg) {
    if (!cfg.valid()) {
        throw std::invalid_argument("invalid chunk config");
    }
    std::u32string text = text::utf8_decode(text::normalize_newlines(raw));
    if (text.empty()) {
        throw EmptyDocumentError(doc_id);
    }

    const std::size_t n = text.size();
    const std::size_t target = cfg.target_size;
    const std::size_t overlay = cfg.overlay_size();

    std::vector<Fragment> fragments;
    std::size_t start = 0;
    while (start < n) {
        std::size_t end;
        if (n - start <= target) {
            end = n;
        } else {
            // Search the last cut point in [start + target/2, start + target];
            // candidates are positions just after a qualifying character.
            std::size_t window_hi = start + target; // inclusive candidate bound for `end`
            std::size_t window_lo = start + target / 2;
            end = 0;
            for (std::size_t cand = window_hi; cand >= window_lo; --cand) {
                if (cut_after(text, cand - 1)) {
                    end = cand;
                    break;
                }
            }
            if (end == 0) end = start + target; // hard cut
        }

        Fragment frag;
        frag.doc_id = doc_id;
        frag.index = fragments.size();
        frag.core_start = start;
        frag.core_end = end;
        std::size_t prefix_start = start >= overlay ? start - overlay : 0;
        std::size_t suffix_end = std::min(n, end + overlay);
        frag.text = text::utf8_encode(
            std::u32string_view(text).substr(prefix_start, suffix_end - prefix_start));
        fragments.push_back(std::move(frag));
        start = end;
    }
    return fragments;
}

} // namespace kgraph
