#include "doctest.h"

#include <set>

#include "minbasis/search.hpp"

using namespace minbasis;

namespace {

std::uint64_t surjection_count(std::uint32_t h, std::uint32_t p) {
    // inclusion-exclusion: sum (-1)^k C(h,k) (h-k)^p
    auto power = [](std::uint64_t base, std::uint32_t exp) {
        std::uint64_t out = 1;
        while (exp--) out *= base;
        return out;
    };
    std::int64_t total = 0;
    std::uint64_t binom = 1;
    for (std::uint32_t k = 0; k <= h; ++k) {
        const std::int64_t term =
            static_cast<std::int64_t>(binom) * static_cast<std::int64_t>(power(h - k, p));
        total += (k % 2 == 0) ? term : -term;
        binom = binom * (h - k) / (k + 1);
    }
    return static_cast<std::uint64_t>(total);
}

}  // namespace

TEST_CASE("enumerate_periodic_specs counts") {
    const auto two = enumerate_periodic_specs(2, 2, 0);
    REQUIRE(two.size() == 2);
    CHECK(two[0].pattern == std::vector<std::uint32_t>{1, 2});
    CHECK(two[1].pattern == std::vector<std::uint32_t>{2, 1});

    CHECK(enumerate_periodic_specs(2, 1, 0).empty());
    CHECK(enumerate_periodic_specs(3, 3, 0).size() == 6);

    for (std::uint32_t h = 2; h <= 3; ++h)
        for (std::uint32_t p = h; p <= 6; ++p)
            CHECK(enumerate_periodic_specs(h, p, 0).size() == surjection_count(h, p));

    // prefixes multiply the space by h^L
    CHECK(enumerate_periodic_specs(2, 2, 2).size() == 4 * 2);

    CHECK_THROWS_AS(enumerate_periodic_specs(2, 30, 0, 1000), Error);
}

TEST_CASE("enumeration is deterministic and every spec is valid") {
    const auto specs = enumerate_periodic_specs(3, 4, 1);
    CHECK(specs.size() == 3 * surjection_count(3, 4));
    std::set<std::string> keys;
    for (const PartitionSpec& spec : specs) {
        CHECK(validate_spec(spec).ok);
        CHECK(keys.insert(spec_key(spec)).second);
    }
}

TEST_CASE("canonicalize reduces period and absorbs prefixes") {
    PartitionSpec doubled;
    doubled.h = 2;
    doubled.pattern = {1, 2, 1, 2};
    CHECK(spec_key(canonicalize(doubled)) == "h=2;prefix=;pattern=1,2");

    PartitionSpec shifted;
    shifted.h = 2;
    shifted.prefix = {1};
    shifted.pattern = {2, 1};
    CHECK(spec_key(canonicalize(shifted)) == "h=2;prefix=;pattern=1,2");

    PartitionSpec irreducible;
    irreducible.h = 2;
    irreducible.prefix = {2};
    irreducible.pattern = {1, 2};
    CHECK(spec_key(canonicalize(irreducible)) == "h=2;prefix=2;pattern=1,2");

    // canonical form preserves the assignment function
    for (const PartitionSpec& spec : {doubled, shifted, irreducible}) {
        const PartitionSpec canon = canonicalize(spec);
        for (std::uint64_t n = 0; n < 40; ++n) CHECK(part_of(spec, n) == part_of(canon, n));
    }
}

TEST_CASE("quotient_labels maps to first-appearance order") {
    PartitionSpec spec;
    spec.h = 3;
    spec.pattern = {3, 1, 2};
    CHECK(quotient_labels(spec).pattern == std::vector<std::uint32_t>{1, 2, 3});

    const auto all = enumerate_periodic_specs(3, 3, 0);
    std::set<std::string> quotiented;
    for (const PartitionSpec& s : all) quotiented.insert(spec_key(quotient_labels(s)));
    CHECK(quotiented.size() == 1);  // all six permutations collapse
}

TEST_CASE("classify_one flags the documented examples") {
    SweepOptions options;
    const ClassificationRow good = classify_one(builtin_nathanson(2), 12, options);
    CHECK(good.thm1.holds);
    REQUIRE(good.thmB.has_value());
    CHECK(good.thmB->verdict == ThmBVerdict::minimal);
    CHECK(good.removable.empty());
    CHECK_FALSE(good.anomaly);

    PartitionSpec negative;
    negative.h = 2;
    negative.prefix = {1, 1, 1, 2};
    negative.pattern = {1, 2};
    const ClassificationRow bad = classify_one(negative, 12, options);
    REQUIRE(bad.thmB.has_value());
    CHECK(bad.thmB->verdict == ThmBVerdict::not_minimal);
    CHECK_FALSE(bad.removable.empty());
    CHECK_FALSE(bad.anomaly);

    // 0 ∈ W_2 forces the relabeled prediction
    PartitionSpec swapped;
    swapped.h = 2;
    swapped.pattern = {2, 1};
    const ClassificationRow relabeled = classify_one(swapped, 10, options);
    REQUIRE(relabeled.thmB.has_value());
    CHECK(relabeled.thmB_relabeled);
    CHECK(relabeled.thmB->verdict == ThmBVerdict::minimal);
}

TEST_CASE("no anomalies across the small two-part sweep") {
    SweepOptions options;
    std::vector<PartitionSpec> specs;
    for (std::uint32_t p = 2; p <= 4; ++p)
        for (std::uint32_t L = 0; L <= 1; ++L)
            for (PartitionSpec& spec : enumerate_periodic_specs(2, p, L))
                specs.push_back(std::move(spec));
    int rows_seen = 0;
    const auto rows = classify_partitions(specs, 12, options,
                                          [&](const ClassificationRow&) { ++rows_seen; });
    CHECK(rows_seen == static_cast<int>(rows.size()));
    for (const ClassificationRow& row : rows) CHECK_FALSE(row.anomaly);
}
