#include "cmposet/cache.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "cmposet/poset_io.hpp"
#include "cmposet/version.hpp"

namespace cmposet {

namespace {

std::string hex(std::uint64_t v) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

}  // namespace

std::string CacheKey::descriptor(const std::string& version) const {
    return "builder=" + builder + ";ring=" + ring + ";genus=" + std::to_string(genus) + ";extra=" + extra +
           ";version=" + version;
}

std::uint64_t fnv1a(const std::string& data) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

PosetCache::PosetCache(std::string dir, std::string version)
    : dir_(std::move(dir)), version_(version.empty() ? library_version : std::move(version)) {
    std::filesystem::create_directories(dir_);
}

std::string PosetCache::entry_path(const CacheKey& key) const {
    return (std::filesystem::path(dir_) / (hex(fnv1a(key.descriptor(version_))) + ".poset")).string();
}

FinitePoset PosetCache::get_or_build(const CacheKey& key, const std::function<FinitePoset()>& build, bool verify) {
    const auto path = entry_path(key);
    const auto descriptor = key.descriptor(version_);
    if (std::ifstream in{path}) {
        std::ostringstream buf;
        buf << in.rdbuf();
        const std::string text = buf.str();
        // line 1: descriptor, line 2: checksum of the body
        const auto l1 = text.find('\n');
        const auto l2 = l1 == std::string::npos ? l1 : text.find('\n', l1 + 1);
        std::string problem;
        if (l2 == std::string::npos) {
            problem = "truncated header";
        } else if (text.substr(0, l1) != descriptor) {
            problem = "descriptor mismatch";
        } else {
            const auto body = text.substr(l2 + 1);
            if (text.substr(l1 + 1, l2 - l1 - 1) != hex(fnv1a(body))) {
                problem = "checksum mismatch";
            } else {
                try {
                    auto p = read_text(body);
                    ++hits_;
                    if (verify && !(p == build())) throw std::logic_error("cache entry differs from a fresh build: " + path);
                    return p;
                } catch (const FormatError& e) {
                    problem = e.what();
                }
            }
        }
        const auto warning = "cache entry " + path + " is corrupt (" + problem + "); rebuilding";
        warnings_.push_back(warning);
        std::cerr << "warning: " << warning << '\n';
    }
    ++misses_;
    auto p = build();
    const auto body = write_text(p);
    const auto tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        out << descriptor << '\n' << hex(fnv1a(body)) << '\n' << body;
    }
    std::filesystem::rename(tmp, path);
    return p;
}

}  // namespace cmposet
