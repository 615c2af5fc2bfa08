// Copyright (c) 2026 the rdbounds authors.
// Licensed under the Apache License, Version 2.0.

#include <catch2/catch_amalgamated.hpp>

#include "rdb/ledger.hpp"

using namespace rdb;

TEST_CASE("rho and eta", "[ledger]") {
  CHECK(rho(1) == 25);
  CHECK(rho(5) == 1773);
  CHECK(rho(9) == 612581);
  CHECK(eta(1) == 36);
  CHECK(eta(2) == 108);
  CHECK(eta(9) == Natural(4) * pow_nat(Natural(3), 10));
  CHECK_THROWS_AS(rho(0), DomainError);
  CHECK_THROWS_AS(rho(10), DomainError);
}

TEST_CASE("every ledger case passes", "[ledger]") {
  LedgerReport n6 = audit_ledger("n6");
  INFO("n6 checks: " << n6.checks.size());
  CHECK(n6.pass());
  CHECK(n6.flags() == 0);
  CHECK(n6.max_extension_degree == 20);

  for (unsigned k = 1; k <= 9; ++k) {
    LedgerReport rep = audit_ledger("k" + std::to_string(k));
    INFO("case k" << k);
    CHECK(rep.pass());
    CHECK(rep.max_extension_degree == eta(k));
    // Two recorded near-misses in the largest case, one in k2, none
    // elsewhere.
    unsigned expected_flags = k == 9 ? 2 : (k == 2 ? 1 : 0);
    CHECK(rep.flags() == expected_flags);
  }
  CHECK_THROWS_AS(audit_ledger("k10"), DomainError);
  CHECK_THROWS_AS(audit_ledger("bogus"), DomainError);
}

TEST_CASE("flagged near-misses carry both values", "[ledger]") {
  LedgerReport rep = audit_ledger("k9");
  std::vector<const LedgerCheck*> flagged;
  for (const auto& c : rep.checks)
    if (c.flagged) flagged.push_back(&c);
  REQUIRE(flagged.size() == 2);
  for (const auto* c : flagged) {
    CHECK_FALSE(c->pass);
    CHECK(c->expected != c->computed);
  }
}

TEST_CASE("pipeline arithmetic audit", "[ledger]") {
  LedgerReport rep = wolfson_pipeline_audit();
  CHECK(rep.pass());
  CHECK(rep.flags() == 0);
  CHECK(rep.checks.size() >= 10);
  CHECK(rep.max_extension_degree ==
        Natural("3298353885918738132194252727911"));
}
