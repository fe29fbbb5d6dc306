#include "kgraph/textnorm.hpp"

#include <cstdint>

namespace kgraph::text {

namespace {

constexpr char32_t kReplacement = 0xFFFD;

// Base letters for U+0100..U+017F (Latin Extended-A), indexed by
// code point minus 0x100. Two-letter expansions spelled out.
const char* latin_ext_a_base(char32_t c) {
    switch (c) {
    case 0x0132: case 0x0133: return "ij";
    case 0x0152: case 0x0153: return "oe";
    default: break;
    }
    if (c >= 0x0100 && c <= 0x0105) return "a";
    if (c >= 0x0106 && c <= 0x010D) return "c";
    if (c >= 0x010E && c <= 0x0111) return "d";
    if (c >= 0x0112 && c <= 0x011B) return "e";
    if (c >= 0x011C && c <= 0x0123) return "g";
    if (c >= 0x0124 && c <= 0x0127) return "h";
    if (c >= 0x0128 && c <= 0x0131) return "i";
    if (c >= 0x0134 && c <= 0x0135) return "j";
    if (c >= 0x0136 && c <= 0x0138) return "k";
    if (c >= 0x0139 && c <= 0x0142) return "l";
    if (c >= 0x0143 && c <= 0x0149) return "n";
    if (c >= 0x014A && c <= 0x014B) return "n";
    if (c >= 0x014C && c <= 0x0151) return "o";
    if (c >= 0x0154 && c <= 0x0159) return "r";
    if (c >= 0x015A && c <= 0x0161) return "s";
    if (c >= 0x0162 && c <= 0x0167) return "t";
    if (c >= 0x0168 && c <= 0x0173) return "u";
    if (c >= 0x0174 && c <= 0x0175) return "w";
    if (c >= 0x0176 && c <= 0x0178) return "y";
    if (c >= 0x0179 && c <= 0x017E) return "z";
    if (c == 0x017F) return "s";
    return nullptr;
}

// Base letters for the letter range of U+00C0..U+00FF (Latin-1 Supplement).
const char* latin1_base(char32_t c) {
    // Uppercase and lowercase halves have the same layout.
    if (c >= 0xC0 && c <= 0xDE) c += 0x20;
    switch (c) {
    case 0xE6: return "ae";
    case 0xDF: return "ss";
    case 0xFE: return "th";
    case 0xE7: return "c";
    case 0xF0: return "d";
    case 0xF1: return "n";
    default: break;
    }
    if (c >= 0xE0 && c <= 0xE5) return "a";
    if (c >= 0xE8 && c <= 0xEB) return "e";
    if (c >= 0xEC && c <= 0xEF) return "i";
    if ((c >= 0xF2 && c <= 0xF6) || c == 0xF8) return "o";
    if (c >= 0xF9 && c <= 0xFC) return "u";
    if (c == 0xFD || c == 0xFF) return "y";
    return nullptr;
}

} // namespace

std::u32string utf8_decode(std::string_view s) {
    std::u32string out;
    out.reserve(s.size());
    std::size_t i = 0;
    const auto byte = [&](std::size_t k) { return static_cast<unsigned char>(s[k]); };
    while (i < s.size()) {
        unsigned char b0 = byte(i);
        if (b0 < 0x80) {
            out.push_back(b0);
            ++i;
            continue;
        }
        int len = 0;
        char32_t cp = 0;
        if ((b0 & 0xE0) == 0xC0) { len = 2; cp = b0 & 0x1F; }
        else if ((b0 & 0xF0) == 0xE0) { len = 3; cp = b0 & 0x0F; }
        else if ((b0 & 0xF8) == 0xF0) { len = 4; cp = b0 & 0x07; }
        else { out.push_back(kReplacement); ++i; continue; }
        if (i + static_cast<std::size_t>(len) > s.size()) {
            out.push_back(kReplacement);
            ++i;
            continue;
        }
        bool ok = true;
        for (int k = 1; k < len; ++k) {
            unsigned char bk = byte(i + static_cast<std::size_t>(k));
            if ((bk & 0xC0) != 0x80) { ok = false; break; }
            cp = (cp << 6) | (bk & 0x3F);
        }
        if (!ok || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF) ||
            (len == 2 && cp < 0x80) || (len == 3 && cp < 0x800) || (len == 4 && cp < 0x10000)) {
            out.push_back(kReplacement);
            ++i;
            continue;
        }
        out.push_back(cp);
        i += static_cast<std::size_t>(len);
    }
    return out;
}

std::string utf8_encode(char32_t c) {
    std::string out;
    if (c < 0x80) {
        out.push_back(static_cast<char>(c));
    } else if (c < 0x800) {
        out.push_back(static_cast<char>(0xC0 | (c >> 6)));
        out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
    } else if (c < 0x10000) {
        out.push_back(static_cast<char>(0xE0 | (c >> 12)));
        out.push_back(static_cast<char>(0x80 | ((c >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
    } else {
        out.push_back(static_cast<char>(0xF0 | (c >> 18)));
        out.push_back(static_cast<char>(0x80 | ((c >> 12) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | ((c >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
    }
    return out;
}

std::string utf8_encode(std::u32string_view s) {
    std::string out;
    out.reserve(s.size());
    for (char32_t c : s) out += utf8_encode(c);
    return out;
}

std::string normalize_newlines(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '\r') {
            out.push_back('\n');
            if (i + 1 < s.size() && s[i + 1] == '\n') ++i;
        } else {
            out.push_back(s[i]);
        }
    }
    return out;
}

std::string fold(std::string_view s) {
    std::u32string cps = utf8_decode(s);
    std::string out;
    out.reserve(s.size());
    for (char32_t c : cps) {
        if (c < 0x80) {
            if (c >= 'A' && c <= 'Z') c += 0x20;
            out.push_back(static_cast<char>(c));
        } else if (c >= 0xC0 && c <= 0xFF) {
            if (const char* base = latin1_base(c)) out += base;
            else out += utf8_encode(c);
        } else if (c >= 0x0100 && c <= 0x017F) {
            if (const char* base = latin_ext_a_base(c)) out += base;
            else out += utf8_encode(c);
        } else {
            out += utf8_encode(c);
        }
    }
    return out;
}

std::vector<std::string> fold_tokens(std::string_view s) {
    std::string folded = fold(s);
    std::vector<std::string> out;
    std::string cur;
    for (char ch : folded) {
        if (ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r' || ch == '\f' || ch == '\v') {
            if (!cur.empty()) out.push_back(std::move(cur));
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    if (!cur.empty()) out.push_back(std::move(cur));
    return out;
}

bool is_space(char32_t c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

bool is_sentence_terminator(char32_t c) {
    return c == '.' || c == '?' || c == '!';
}

std::string collapse_spaces(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    bool in_space = true; // leading whitespace dropped
    for (char ch : s) {
        bool sp = ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r' || ch == '\f' || ch == '\v';
        if (sp) {
            if (!in_space) out.push_back(' ');
            in_space = true;
        } else {
            out.push_back(ch);
            in_space = false;
        }
    }
    while (!out.empty() && out.back() == ' ') out.pop_back();
    return out;
}

} // namespace kgraph::text
