#include "doctest.h"

#include "goldie/json_io.hpp"
#include "goldie/kl.hpp"

using namespace goldie;

TEST_CASE("rational serialization") {
  CHECK(rational_from_json(rational_to_json(Rational(-7, 3))) ==
        Rational(-7, 3));
  CHECK(rational_from_json(Json(5)) == Rational(5));
  CHECK(rational_from_json(Json("3/2")) == Rational(3, 2));
  CHECK_THROWS(rational_from_json(Json("bogus")));
}

TEST_CASE("weight serialization and parsing") {
  Weight a({Rational(1, 2), Rational(-2), Rational(3)});
  CHECK(weight_from_json(weight_to_json(a)) == a);
  CHECK(weight_from_string("1/2,-2,3") == a);
  CHECK(weight_from_string("[\"1/2\", -2, 3]") == a);
  CHECK_THROWS(weight_from_string(""));
  CHECK_THROWS(weight_from_string("1,,2"));
}

TEST_CASE("permutation serialization") {
  Permutation w({3, 1, 4, 2});
  CHECK(permutation_from_json(permutation_to_json(w)) == w);
  CHECK_THROWS(permutation_from_json(Json::parse("[1,1,2]")));
}

TEST_CASE("tableau serialization") {
  Tableau lj = Tableau::from_rows_bottom_up(
      {{Rational(1), Rational(5, 2)}, {Rational(2)}});
  Json j = tableau_to_json(lj);
  CHECK(j.contains("partition"));  // left-justified shorthand
  CHECK(tableau_from_json(j) == lj);

  Tableau shifted(Pyramid({1, 2}, ShiftMatrix({{0, 0}, {1, 0}})),
                  {{Rational(2)}, {Rational(0), Rational(1)}});
  Json js = tableau_to_json(shifted);
  CHECK(js.contains("shape"));
  CHECK(tableau_from_json(js) == shifted);

  // the shorthand also parses directly
  Tableau parsed = tableau_from_json(
      Json::parse(R"({"partition":[2,1],"rows_bottom_up":[[1,3],[2]]})"));
  CHECK(parsed == Tableau::from_rows_bottom_up({{1, 3}, {2}}));
}

TEST_CASE("insertion pair and report payloads") {
  RSPair pq = rs_pair(Permutation({2, 3, 1}));
  Json j = rs_pair_to_json(pq);
  CHECK(j.contains("p"));
  CHECK(j.contains("q"));
  CHECK(j.contains("shape"));
  CHECK(tableau_from_json(j["p"]) == pq.p);
  CHECK(tableau_from_json(j["q"]) == pq.q);

  KLCache cache(1);
  GoldieReport report =
      goldie_rank(Weight({Rational(3), Rational(1)}), cache);
  Json r = report_to_json(report);
  CHECK(r.contains("weight"));
  CHECK(r.contains("factors"));
  CHECK(r.contains("total_rank"));
  CHECK(r.contains("completely_prime"));
  CHECK(weight_from_json(r["weight"]) == report.input);
  CHECK(r["factors"].size() == report.factors.size());
}

TEST_CASE("solver payloads") {
  Json j = Json::parse(R"({
    "row_lengths": [1, 2],
    "values": [[[3, 0]], [[5, 0]]]
  })");
  StupInput in = stup_input_from_json(j);
  CHECK(in.row_lengths == std::vector<int>{1, 2});
  REQUIRE(in.a.size() == 2);
  CHECK(in.a[0][0] == Complex(3));
  CHECK(in.a[1][0] == Complex(5));

  StupSolution sol = stup_solve(in);
  Json out = stup_solution_to_json(sol);
  CHECK(out.contains("rows"));
  CHECK(out.contains("residuals"));
  CHECK(out.contains("max_residual"));
  CHECK(out["rows"].size() == 2);
}
