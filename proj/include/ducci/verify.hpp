#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace ducci {

struct PropertyResult {
    std::string suite;
    std::string name;
    std::size_t cases = 0;
    bool passed = true;
    std::string counterexample;  // empty when passed
    std::string detail;          // optional coverage note
};

struct VerifyReport {
    std::vector<PropertyResult> results;

    bool all_passed() const;
    std::string to_text() const;
    std::string to_json() const;
};

// Suite names: parity, divisibility, builders, equivalence, necessity, all.
inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"parity", "divisibility", "builders", "equivalence", "necessity"};
    return names;
}

// Runs the selected property suites with fixed seeds. Every randomized
// property draws `cases` inputs. Unknown names throw ValidationError.
VerifyReport verify_suites(const std::vector<std::string>& selection, std::size_t cases = 256,
                           std::uint64_t seed = 20240601);

}  // namespace ducci
