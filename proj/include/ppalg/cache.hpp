#pragma once

#include <optional>
#include <string>

#include "ppalg/quiver.hpp"
#include "ppalg/truncation.hpp"

// On-disk cache of truncated preprojective quotients.  Entries are JSON
// snapshots keyed by the quiver, the weight, the truncation bound and the
// monomial-order version; a stale version, a checksum mismatch or any parse
// or revalidation failure is treated as a miss and the entry is rebuilt.
// Writes go through a temporary file and an atomic rename.
namespace ppalg {

// Bump when the monomial order or the rule-table format changes; stored
// entries from other versions are never trusted.
inline constexpr int kCacheFormatVersion = 1;

struct CacheOutcome {
    TruncatedQuotient quotient;
    bool hit = false;        // served from disk
    bool verified = false;   // compared bit-exact against a fresh rebuild
    std::string file;        // entry path inside the cache directory
};

std::string cache_key(const DoubleQuiver& dq, const Weight& lambda,
                      const TruncatedQuotient::Options& opt);

// Builds or loads the truncated quotient of the doubled quiver at lambda.
// With verify set, a cache hit is additionally rebuilt from scratch and the
// two rule tables must serialize identically.
CacheOutcome cached_preprojective(const std::string& cache_dir, const DoubleQuiver& dq,
                                  const Weight& lambda, const TruncatedQuotient::Options& opt,
                                  bool verify = false);

} // namespace ppalg
