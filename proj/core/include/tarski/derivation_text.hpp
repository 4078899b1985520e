#pragma once

// Text format for derivations:
//
//   name: lemma_abb
//   premises: IE, SC
//   goal: forall a b. B a b b
//   1. forall a b c. (D a b c c -> = a b) ; premise IE
//   ...
//   4. obtain x from 3
//   5. B a b x ; and-elim-l 4
//   ...
//   qed-frame
//   11. B a b b ; exists-elim 4
//
// Blank lines and lines starting with '#' are ignored. Frames are opened by
// "<n>. assume <formula>" or "<n>. obtain <var> from <m>" and closed by
// "qed-frame".

#include "tarski/kernel.hpp"
#include "tarski/parser.hpp"

#include <string>
#include <string_view>

namespace tarski {

/// Throws ParseError (line = line of the file) on malformed input and Error
/// on unknown premise names.
Derivation parse_derivation(std::string_view text);

std::string render_derivation(const Derivation& d);

}  // namespace tarski
