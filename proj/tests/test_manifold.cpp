#include <toruskit/manifold.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace toruskit;

TEST_CASE("betti derivation for the standard records") {
    const BettiNumbers r = derive_betti(cp2_k_cp2bar(3));
    CHECK(r.b_plus == 1);
    CHECK(r.b_minus == 3);
    CHECK(r.b2 == 4);

    const BettiNumbers s = derive_betti(sym2_sigma3());
    CHECK(s.b_plus == 7);
    CHECK(s.b_minus == 9);
    CHECK(s.b2 == 16);

    const BettiNumbers t = derive_betti(t4_record());
    CHECK(t.b_plus == 3);
    CHECK(t.b_minus == 3);
    CHECK(t.b2 == 6);
}

TEST_CASE("betti derivation rejects broken records") {
    FourManifold m;
    m.name = "broken";
    m.euler = 6;
    m.signature = -1;  // b2 = 4, parity clash
    CHECK_THROWS_AS(derive_betti(m), inconsistent_record_error);

    FourManifold neg;
    neg.name = "neg";
    neg.euler = 0;  // b2 = -2
    CHECK_THROWS_AS(derive_betti(neg), inconsistent_record_error);

    FourManifold open = t0xt0_record();
    CHECK_THROWS_AS(derive_betti(open), precondition_error);
}

TEST_CASE("betti derivation round-trips") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 300; ++trial) {
        const long long b1 = static_cast<long long>(rng() % 5);
        const long long bp = static_cast<long long>(rng() % 6);
        const long long bm = static_cast<long long>(rng() % 10);
        FourManifold m;
        m.b1 = b1;
        m.euler = 2 - 2 * b1 + bp + bm;
        m.signature = bp - bm;
        const BettiNumbers b = derive_betti(m);
        CHECK(b.b_plus == bp);
        CHECK(b.b_minus == bm);
        // reconstruct e and sign from (b1, b+, b-)
        CHECK(m.euler == 2 - 2 * m.b1 + b.b2);
        CHECK(m.signature == b.b_plus - b.b_minus);
    }
}

TEST_CASE("euler characteristic from handle counts") {
    CHECK(euler_from_handles(a_handle_counts()) == 1);
    CHECK(euler_from_handles(HandleCounts{1, 0, 0, 0, 0}) == 1);
    CHECK(euler_from_handles(HandleCounts{1, 2, 1, 0, 0}) == 0);
    CHECK(euler_from_handles(*a_record().handles) == a_record().euler);
}

TEST_CASE("blow up") {
    FourManifold m = cp2();
    for (int i = 0; i < 3; ++i) m = blow_up(m);
    CHECK(m.euler == 6);
    CHECK(m.signature == -2);
    REQUIRE(m.lattice.has_value());
    CHECK(m.lattice->b_minus == 3);

    FourManifold a;
    a.name = "A";
    a.euler = 1;
    a.b1 = 2;
    a.closed = false;
    const FourManifold ab = blow_up(a);
    CHECK(ab.euler == 2);
    CHECK(ab.b1 == 2);

    const FourManifold t = blow_up(t4_record());
    CHECK(t.euler == 1);
    CHECK(t.signature == -1);
}

TEST_CASE("blow up commutes with betti derivation") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        const long long b1 = static_cast<long long>(rng() % 4);
        const long long bp = static_cast<long long>(rng() % 5);
        const long long bm = static_cast<long long>(rng() % 5);
        FourManifold m;
        m.b1 = b1;
        m.euler = 2 - 2 * b1 + bp + bm;
        m.signature = bp - bm;
        const BettiNumbers before = derive_betti(m);
        const BettiNumbers after = derive_betti(blow_up(m));
        CHECK(after.b_plus == before.b_plus);
        CHECK(after.b_minus == before.b_minus + 1);
    }
}

TEST_CASE("record validation") {
    CHECK_NOTHROW(validate(cp2_k_cp2bar(3)));
    CHECK_NOTHROW(validate(sym2_sigma3()));
    CHECK_NOTHROW(validate(a_record()));

    FourManifold bad = cp2_k_cp2bar(3);
    bad.h1_torsion = {1};
    CHECK_THROWS_AS(validate(bad), inconsistent_record_error);

    FourManifold sc = cp2_k_cp2bar(3);
    sc.b1 = 1;
    CHECK_THROWS_AS(validate(sc), inconsistent_record_error);

    FourManifold no_lattice = cp2_k_cp2bar(3);
    no_lattice.lattice.reset();
    CHECK_THROWS_AS(validate(no_lattice), inconsistent_record_error);

    FourManifold wrong_square = cp2_k_cp2bar(3);
    wrong_square.symplectic->canonical_square = 5;
    CHECK_THROWS_AS(validate(wrong_square), inconsistent_record_error);
}

TEST_CASE("torsion compares as a multiset") {
    FourManifold a = t4_record();
    a.h1_torsion = {2, 3};
    FourManifold b = t4_record();
    b.h1_torsion = {3, 2};
    CHECK(a == b);
    b.h1_torsion = {2, 2};
    CHECK(a != b);
    CHECK(same_h1(a, a));
    CHECK_FALSE(same_h1(a, b));
}

TEST_CASE("h1 rendering") {
    FourManifold m;
    CHECK(h1_string(m) == "0");
    m.b1 = 2;
    CHECK(h1_string(m) == "Z^2");
    m.h1_torsion = {5, 3};
    CHECK(h1_string(m) == "Z^2+Z/3+Z/5");
}

TEST_CASE("sites are annotations, not identity") {
    FourManifold a = cp2_k_cp2bar(3);
    FourManifold b = a;
    b.sites.push_back(TorusSite{});
    CHECK(a == b);
}
