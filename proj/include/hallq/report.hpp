#pragma once

#include <string>

#include "json.hpp"

#include "hallq/rep.hpp"

namespace hallq {

// Insertion-ordered JSON so that reports and cache files serialize
// identically across runs.
using OrderedJson = nlohmann::ordered_json;

// Deterministic round-trippable serialization of a bound quiver in the
// input grammar (vertex/arrow/relation lines).
std::string canonical_quiver_text(const BoundQuiver& bq);

// Content-addressed cache key: 64-bit FNV-1a over the canonical quiver
// text, the prime, and the enumeration caps, rendered as fixed-width hex.
std::string cache_key(const BoundQuiver& bq, int p, const EnumCaps& caps);

OrderedJson table_to_json(const IndecompTable& table);
IndecompTable table_from_json(const OrderedJson& j);

// Enumerate indecomposables through a directory cache. An empty cache_dir
// disables caching; unreadable or stale cache entries are recomputed and
// rewritten. A cache-warm call returns a table that serializes to the very
// bytes stored on disk.
IndecompTable cached_indecomposables(const std::string& cache_dir, const BoundQuiver& bq,
                                     int p, const RootSet& roots, const EnumCaps& caps);

} // namespace hallq
