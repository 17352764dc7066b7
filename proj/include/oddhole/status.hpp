#pragma once

namespace oddhole {

// Shared four-state outcome for lemma/theorem instance checks. Fail always
// comes with a concrete witness; Skipped means the hypothesis did not apply;
// Unknown means a search budget gave out first.
enum class CheckStatus { Pass, Fail, Skipped, Unknown };

inline const char* to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        case CheckStatus::Skipped: return "skipped";
        case CheckStatus::Unknown: return "unknown";
    }
    return "?";
}

}  // namespace oddhole
