#pragma once
// Text normalization primitives shared by the chunker, the extractor and
// the resolver: UTF-8 decoding, newline normalization, lowercase/accent
// folding and name tokenization. Sizes and offsets throughout the project
// count Unicode scalar values, not bytes.

#include <string>
#include <string_view>
#include <vector>

namespace kgraph::text {

// Decodes UTF-8; invalid sequences become U+FFFD (one per offending byte).
std::u32string utf8_decode(std::string_view s);
std::string utf8_encode(std::u32string_view s);
std::string utf8_encode(char32_t c);

// CRLF and lone CR collapse to LF; nothing else is rewritten.
std::string normalize_newlines(std::string_view s);

// Lowercase without accents: ASCII lowered, Latin-1 Supplement and
// Latin Extended-A letters mapped to their unaccented base letters
// (n~ -> n, e' -> e, ss/ae/oe ligatures expanded). Other code points
// pass through unchanged. Idempotent.
std::string fold(std::string_view s);

// fold() then split on ASCII whitespace; empty tokens dropped.
std::vector<std::string> fold_tokens(std::string_view s);

bool is_space(char32_t c);
bool is_sentence_terminator(char32_t c); // '.', '?', '!'

// Collapses runs of whitespace to single spaces and trims; applied to
// attribute values before storage so names compare cleanly.
std::string collapse_spaces(std::string_view s);

} // namespace kgraph::text
