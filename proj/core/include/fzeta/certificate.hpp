#ifndef FZETA_CERTIFICATE_HPP
#define FZETA_CERTIFICATE_HPP

#include <string>
#include <vector>

namespace fzeta {

// Accumulates one line per checked identity; a single failure flips `passed`.
struct Certificate {
    bool passed = true;
    std::vector<std::string> checked;
    std::vector<std::string> failed;

    void record(bool ok, std::string line)
    {
        if (ok) {
            checked.push_back(std::move(line));
        } else {
            passed = false;
            failed.push_back(std::move(line));
        }
    }

    void merge(const Certificate& o)
    {
        passed = passed && o.passed;
        checked.insert(checked.end(), o.checked.begin(), o.checked.end());
        failed.insert(failed.end(), o.failed.begin(), o.failed.end());
    }
};

} // namespace fzeta

#endif
