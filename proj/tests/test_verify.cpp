#include <gtest/gtest.h>

#include <cmath>

#include "mzi/constructions.hpp"
#include "mzi/report_io.hpp"
#include "mzi/verify.hpp"

using namespace mzi;

namespace {

const VerificationReport* find(const std::vector<VerificationReport>& reports,
                               const std::string& suite, int n) {
  for (const auto& r : reports) {
    if (r.suite == suite && r.params.n == n) return &r;
  }
  return nullptr;
}

}  // namespace

TEST(ClosedForms, AgreeWithConstructions) {
  for (int n = 2; n <= 12; ++n) {
    for (int k = 1; k <= n - 1; ++k) {
      EXPECT_EQ(knk_pi1_formula(n, k), pi1_exact(k_n_k(n, k))) << n << ' ' << k;
      EXPECT_EQ(knk_pi2_formula(n, k), pi2_exact(k_n_k(n, k))) << n << ' ' << k;
    }
    for (int p = 2; p <= n - 1; ++p) {
      EXPECT_EQ(ga_pi1_formula(n, p), pi1_exact(g_a(n, p))) << n << ' ' << p;
      EXPECT_EQ(spider_pi1_formula(n, p), pi1_exact(a1_trees(n, p).front()));
      if (p <= n - 2) EXPECT_EQ(gs_pi2_formula(n, p), pi2_exact(g_s(n, p)));
    }
  }
  for (int n = 4; n <= 12; ++n) {
    for (int p = 2; p <= n - 1; ++p) {
      EXPECT_EQ(balanced_tree_pi2_formula(n, p), pi2_exact(a2_trees(n, p).front()));
    }
  }
}

TEST(ClosedForms, PrintedVariants) {
  EXPECT_EQ(knk_pi1_printed(5, 2), 26244);
  EXPECT_EQ(knk_pi1_formula(5, 2), 82944);
  EXPECT_EQ(knk_pi1_printed(5, 1), knk_pi1_formula(5, 1));
  EXPECT_NE(knk_pi1_printed(5, 4), knk_pi1_formula(5, 4));
  EXPECT_FALSE(ga_pi1_printed(8, 6).has_value());
  EXPECT_EQ(ga_pi1_formula(7, 3), 36864);
  EXPECT_NE(ga_pi1_printed(7, 3), ga_pi1_formula(7, 3));
}

TEST(Verify, ConnectivityMaxExamples) {
  const auto r = verify_connectivity_max(5, 2, ClassKind::kVertexConnectivity);
  EXPECT_EQ(r.status, Status::kVerified) << r.details;
  EXPECT_EQ(r.observed.at("pi1_max"), "82944");
  EXPECT_EQ(r.observed.at("pi2_max"), "191102976");
  EXPECT_EQ(r.witnesses.at("pi1_max").size(), 1U);
  const auto e = verify_connectivity_max(5, 1, ClassKind::kEdgeConnectivity);
  EXPECT_EQ(e.observed.at("pi2_max"), "5038848");
  const auto full = verify_connectivity_max(6, 5, ClassKind::kVertexConnectivity);
  EXPECT_EQ(full.observed.at("pi1_max"), "244140625");
  EXPECT_THROW(verify_connectivity_max(5, 5, ClassKind::kVertexConnectivity),
               std::invalid_argument);
}

TEST(Verify, ConnectivityMinExamples) {
  const auto r = verify_connectivity_min(6, ClassKind::kVertexConnectivity);
  EXPECT_EQ(r.status, Status::kVerified) << r.details;
  EXPECT_EQ(r.observed.at("pi1_min"), "25");
  EXPECT_EQ(r.observed.at("pi2_min"), "256");
  EXPECT_EQ(verify_connectivity_min(7, ClassKind::kEdgeConnectivity).observed.at("pi2_min"),
            "1024");
  const auto three = verify_connectivity_min(3, ClassKind::kVertexConnectivity);
  EXPECT_EQ(three.witnesses.at("pi1_min"), three.witnesses.at("pi2_min"));
}

TEST(Verify, PrintedBoundDetected) {
  const auto r = verify_printed_bound(5, 2);
  EXPECT_EQ(r.status, Status::kVerified) << r.details;
  EXPECT_EQ(r.expected.at("pi1_max_printed_form"), "26244");
  EXPECT_EQ(r.observed.at("printed_form_matches"), "false");
  EXPECT_FALSE(r.findings.empty());
}

TEST(Verify, PendantMaxExamples) {
  const auto r = verify_pendant_max(6, 3);
  EXPECT_EQ(r.status, Status::kVerified) << r.details;
  EXPECT_EQ(r.observed.at("pi1_max"), "729");
  EXPECT_EQ(r.observed.at("pi2_max"), "50000");
  EXPECT_EQ(verify_pendant_max(7, 3).observed.at("pi1_max"), "36864");
  EXPECT_THROW(verify_pendant_max(6, 5), std::invalid_argument);
}

// With n - p = 2 the construction meant for the pi2 maximum is a star with
// p + 1 leaves, so the class maximum falls short of the closed form.
TEST(Verify, PendantMaxBoundaryIsReported) {
  const auto r = verify_pendant_max(7, 5);
  EXPECT_EQ(r.status, Status::kFormulaMismatch);
  EXPECT_EQ(r.expected.at("pi2_max"), "46656");
  bool flagged = false;
  for (const auto& f : r.findings) flagged |= f.find("outside the class") != std::string::npos;
  EXPECT_TRUE(flagged);
}

TEST(Verify, PendantMinExamples) {
  const auto r = verify_pendant_min(6, 3);
  EXPECT_EQ(r.status, Status::kVerified) << r.details;
  EXPECT_EQ(r.observed.at("pi1_min"), "144");
  EXPECT_EQ(r.observed.at("pi2_min"), "432");
  const auto s = verify_pendant_min(7, 3);
  EXPECT_EQ(s.observed.at("pi1_min"), "576");
  EXPECT_EQ(s.observed.at("pi2_min"), "1728");
  const auto star_case = verify_pendant_min(6, 5);
  EXPECT_EQ(star_case.witnesses.at("pi1_min").size(), 1U);
}

TEST(Verify, LemmaExamples) {
  const auto reports = verify_lemmas(LemmaLimits{6, 7, 6});
  const auto* trees = find(reports, "tree_extremes", 7);
  ASSERT_NE(trees, nullptr);
  EXPECT_EQ(trees->instances, 9U);
  EXPECT_EQ(trees->status, Status::kVerified);
  const auto* transfer = find(reports, "neighbor_transfer", 6);
  ASSERT_NE(transfer, nullptr);
  EXPECT_EQ(transfer->status, Status::kVerified);
  EXPECT_GT(transfer->instances, 0U);
  for (const auto& r : reports) EXPECT_FALSE(is_failure(r.status)) << r.suite << r.details;
}

TEST(Verify, ScalarFunctions) {
  EXPECT_NEAR(std::exp(log_f3(1, 10)), 81.0, 1e-9);
  EXPECT_NEAR(std::exp(log_f3(5, 10)), 625.0, 1e-9);
  EXPECT_NEAR(std::exp(log_f1(1, 1)), 2.0, 1e-12);
  EXPECT_NEAR(std::exp(log_f1(2, 1)), 4.5, 1e-12);
  EXPECT_NEAR(std::exp(log_f1(3, 1)), 64.0 / 9.0, 1e-12);
  EXPECT_NEAR(log_f2(2.5, 0), 0.0, 1e-15);
  EXPECT_LT(log_f2(2.0, 1.0), log_f2(1.0, 1.0));
}

TEST(Verify, Propositions) {
  const auto reports = verify_propositions(PropositionGrid{});
  EXPECT_EQ(reports.size(), 5U + 5U + 17U);
  for (const auto& r : reports) {
    EXPECT_EQ(r.status, Status::kVerified) << r.suite << ' ' << r.details;
    EXPECT_GE(r.instances, 99U);
  }
}

TEST(Verify, SmallOrderSuitesAreSkipped) {
  RunOptions opts;
  opts.graph_n_max = 2;
  opts.tree_n_max = 2;
  const auto summary = summarize(run_suite("pendant", opts));
  EXPECT_TRUE(summary.ok());
  EXPECT_GT(summary.skipped, 0U);
  EXPECT_EQ(summary.verified, 0U);
  const auto lemmas = summarize(run_suite("lemmas", opts));
  EXPECT_TRUE(lemmas.ok());
  EXPECT_GT(lemmas.skipped, 0U);
}

TEST(Verify, UnknownSuiteThrows) {
  EXPECT_THROW(run_suite("bogus", RunOptions{}), std::invalid_argument);
}

TEST(Verify, ReportsAreByteReproducible) {
  RunOptions one;
  one.graph_n_max = 6;
  one.tree_n_max = 8;
  RunOptions many = one;
  many.jobs = 4;
  EXPECT_EQ(to_json(run_suite("all", one)), to_json(run_suite("all", many)));
}

TEST(Verify, StatusInvariant) {
  RunOptions opts;
  opts.graph_n_max = 6;
  for (const auto& r : run_suite("connectivity", opts)) {
    if (r.status != Status::kVerified) continue;
    for (const auto& [key, value] : r.expected) {
      if (r.observed.count(key)) EXPECT_EQ(r.observed.at(key), value) << key;
    }
  }
}
