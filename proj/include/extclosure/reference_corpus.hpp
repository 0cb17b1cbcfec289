#pragma once

// Built-in reference corpus of worked examples with known answers. Each check
// recomputes its example from scratch and compares against the stated value.

#include <string>
#include <vector>

#include "extclosure/report.hpp"

namespace extclosure {

/// Ring definition texts used by the corpus, also shipped under rings/.
namespace reference_rings {
inline constexpr const char* kGorenstein4 =
    "p=2 vars=x,y,z,w\nx^2\nxy\nxz-yw\nxw\ny^2\nyz\nz^2\nzw\nw^2\n";
inline constexpr const char* kStretched = "p=3 vars=x,y,z\nxy\nxz\nyz\nx^3-y^2\nx^3-z^2\n";
inline constexpr const char* kSmallMaximal = "p=2 vars=x,y\nx^2\nxy\ny^2\n";
inline constexpr const char* kTensorSquare = "p=2 vars=x,y\nx^2\ny^2\n";
inline constexpr const char* kQuartic = "p=3 vars=x\nx^4\n";
}  // namespace reference_rings

struct CorpusOptions {
    std::size_t depth = 3;  // filt levels enumerated for the filtration checks
    EnumerationOptions enumeration;
};

struct CorpusCheck {
    std::string id;
    std::string claim;
    bool passed = false;
    Json observed;
};

std::vector<CorpusCheck> run_reference_corpus(const CorpusOptions& options = {});

/// {"checks": [...], "passed": n, "failed": m, "all_passed": bool}
Json corpus_json(const std::vector<CorpusCheck>& checks);

}  // namespace extclosure
