#pragma once

#include <string>
#include <utility>
#include <vector>

namespace catgr {

/// One violated law instance. `location` is a slash-separated path
/// (e.g. "rep1/(γ,β,α)/x=*"); `detail` carries the evaluated values.
struct Finding {
    std::string check;
    std::string location;
    std::string detail;

    friend bool operator==(const Finding&, const Finding&) = default;
};

class ValidationReport {
public:
    bool ok() const noexcept { return findings_.empty(); }
    std::size_t size() const noexcept { return findings_.size(); }
    const std::vector<Finding>& findings() const noexcept { return findings_; }

    void add(std::string check, std::string location, std::string detail = {}) {
        findings_.push_back({std::move(check), std::move(location), std::move(detail)});
    }

    /// Appends `other`, prefixing each location with `prefix/`.
    void merge(const ValidationReport& other, const std::string& prefix = {}) {
        for (const auto& f : other.findings_) {
            findings_.push_back(
                {f.check, prefix.empty() ? f.location : prefix + "/" + f.location, f.detail});
        }
    }

    bool has_check(const std::string& check) const {
        for (const auto& f : findings_)
            if (f.check == check) return true;
        return false;
    }

private:
    std::vector<Finding> findings_;
};

}  // namespace catgr
