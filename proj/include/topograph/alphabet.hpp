#pragma once

#include <string>
#include <vector>

#include "topograph/graph.hpp"

namespace topograph {

// A built-in letter: its multigraph encoding plus a one-line note on the
// modeling choice (several letters admit more than one plausible junction
// layout; the note says which one is used and why).
struct LetterEntry {
    std::string name;
    TopoGraph graph;
    std::string notes;
};

// The 26 sans-serif uppercase letters, optionally followed by "Ñ".
const std::vector<LetterEntry>& letter_entries(bool with_enye = false);

// Letter names in alphabetical order. With with_enye, "Ñ" is appended.
std::vector<std::string> builtin_names(bool with_enye = false);

// Fixed encoding of one letter. Accepts "A".."Z" and "Ñ" (alias "Ntilde"
// for ASCII-only shells). Throws on anything else.
TopoGraph builtin(const std::string& name);

// Homeomorphism classes of the built-in alphabet.
std::vector<std::vector<std::string>> classify_builtin_alphabet(bool with_enye = false);

} // namespace topograph
