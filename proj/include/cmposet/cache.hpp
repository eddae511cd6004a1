#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "cmposet/poset.hpp"

namespace cmposet {

/// Describes a construction: builder name, ring, genus and any further
/// parameters.
struct CacheKey {
    std::string builder;
    std::string ring;
    int genus = 0;
    std::string extra;

    std::string descriptor(const std::string& version) const;
};

std::uint64_t fnv1a(const std::string& data);

/// Content-addressed store of built posets under one directory. Each entry
/// records its descriptor and a checksum of the body; unreadable or
/// mismatching entries are rebuilt and a warning is recorded.
class PosetCache {
public:
    explicit PosetCache(std::string dir, std::string version = {});

    /// The file name an entry for `key` would use.
    std::string entry_path(const CacheKey& key) const;

    /// Cached poset, or `build()` stored for next time. With `verify` set a
    /// hit is compared against a fresh build and a mismatch throws
    /// std::logic_error.
    FinitePoset get_or_build(const CacheKey& key, const std::function<FinitePoset()>& build, bool verify = false);

    std::size_t hits() const { return hits_; }
    std::size_t misses() const { return misses_; }
    const std::vector<std::string>& warnings() const { return warnings_; }

private:
    std::string dir_;
    std::string version_;
    std::size_t hits_ = 0;
    std::size_t misses_ = 0;
    std::vector<std::string> warnings_;
};

}  // namespace cmposet
