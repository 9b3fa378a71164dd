#include "goldie/json_io.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace goldie {

Json rational_to_json(const Rational& r) { return to_string(r); }

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw std::invalid_argument("expected a rational as string or integer");
}

Json weight_to_json(const Weight& w) {
  Json out = Json::array();
  for (const Rational& c : w.coords) out.push_back(rational_to_json(c));
  return out;
}

Weight weight_from_json(const Json& j) {
  if (!j.is_array() || j.empty())
    throw std::invalid_argument("weight: expected a nonempty array");
  std::vector<Rational> coords;
  for (const Json& c : j) coords.push_back(rational_from_json(c));
  return Weight(std::move(coords));
}

Weight weight_from_string(const std::string& s) {
  std::string trimmed = s;
  auto notspace = [](unsigned char c) { return !std::isspace(c); };
  trimmed.erase(trimmed.begin(),
                std::find_if(trimmed.begin(), trimmed.end(), notspace));
  if (!trimmed.empty() && trimmed.front() == '[')
    return weight_from_json(Json::parse(trimmed));
  std::vector<Rational> coords;
  std::stringstream ss(trimmed);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    tok.erase(std::remove_if(tok.begin(), tok.end(),
                             [](unsigned char c) { return std::isspace(c); }),
              tok.end());
    if (tok.empty()) throw std::invalid_argument("weight: empty coordinate");
    coords.push_back(parse_rational(tok));
  }
  if (coords.empty()) throw std::invalid_argument("weight: no coordinates");
  return Weight(std::move(coords));
}

Json permutation_to_json(const Permutation& w) { return w.images(); }

Permutation permutation_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("permutation: expected array");
  return Permutation(j.get<std::vector<int>>());
}

Json tableau_to_json(const Tableau& t) {
  Json rows = Json::array();
  for (int i = t.pyramid().rows(); i >= 1; --i) {
    Json row = Json::array();
    for (const Rational& e : t.rows()[i - 1]) row.push_back(rational_to_json(e));
    rows.push_back(std::move(row));
  }
  Json out;
  if (t.pyramid().is_left_justified()) {
    out["partition"] = t.pyramid().partition().parts;
  } else {
    Json shape;
    std::vector<int> lengths;
    for (int i = 1; i <= t.pyramid().rows(); ++i)
      lengths.push_back(t.pyramid().row_length(i));
    shape["row_lengths"] = lengths;
    shape["shift_matrix"] = t.pyramid().shift_matrix().entries;
    out["shape"] = std::move(shape);
  }
  out["rows_bottom_up"] = std::move(rows);
  return out;
}

Tableau tableau_from_json(const Json& j) {
  if (!j.contains("rows_bottom_up"))
    throw std::invalid_argument("tableau: missing rows_bottom_up");
  std::vector<std::vector<Rational>> rows_bu;
  for (const Json& row : j.at("rows_bottom_up")) {
    std::vector<Rational> r;
    for (const Json& e : row) r.push_back(rational_from_json(e));
    rows_bu.push_back(std::move(r));
  }
  if (j.contains("partition")) {
    Partition given(j.at("partition").get<std::vector<int>>());
    Tableau t = Tableau::from_rows_bottom_up(rows_bu);
    if (t.pyramid().partition() != given)
      throw std::invalid_argument("tableau: partition does not match rows");
    return t;
  }
  const Json& shape = j.at("shape");
  Pyramid pi(shape.at("row_lengths").get<std::vector<int>>(),
             ShiftMatrix(shape.at("shift_matrix")
                             .get<std::vector<std::vector<int>>>()));
  std::reverse(rows_bu.begin(), rows_bu.end());
  return Tableau(std::move(pi), std::move(rows_bu));
}

Json rs_pair_to_json(const RSPair& pq) {
  Json out;
  out["p"] = tableau_to_json(pq.p);
  out["q"] = tableau_to_json(pq.q);
  out["shape"] = pq.shape.parts;
  return out;
}

Json report_to_json(const GoldieReport& report) {
  Json out;
  out["weight"] = weight_to_json(report.input);
  out["total_rank"] = report.total_rank.str();
  out["completely_prime"] = report.completely_prime;
  Json factors = Json::array();
  for (const GoldieFactor& f : report.factors) {
    Json jf;
    jf["coset_rep"] = rational_to_json(f.coset_rep);
    jf["positions"] = f.positions;
    jf["sub_weight"] = weight_to_json(f.sub_weight);
    jf["q_tableau"] = tableau_to_json(f.q);
    jf["shape"] = f.shape.parts;
    jf["minimal_cell_rep"] = permutation_to_json(f.w_min);
    jf["polynomial"] = f.poly.to_string();
    jf["delta"] = weight_to_json(f.delta);
    jf["rank"] = f.rank.str();
    jf["completely_prime"] = f.factor_completely_prime;
    if (f.induced) {
      Json ji;
      ji["tableau"] = tableau_to_json(f.induced->rearrangement);
      ji["column_heights"] = f.induced->column_heights;
      ji["gamma"] = weight_to_json(f.induced->gamma_a);
      ji["dim_f"] = f.induced->dim_f.str();
      jf["induced"] = std::move(ji);
    }
    factors.push_back(std::move(jf));
  }
  out["factors"] = std::move(factors);
  return out;
}

StupInput stup_input_from_json(const Json& j) {
  StupInput input;
  input.row_lengths = j.at("row_lengths").get<std::vector<int>>();
  for (const Json& row : j.at("values")) {
    std::vector<Complex> vals;
    for (const Json& v : row) {
      if (v.is_array() && v.size() == 2)
        vals.emplace_back(v[0].get<double>(), v[1].get<double>());
      else if (v.is_number())
        vals.emplace_back(v.get<double>(), 0.0);
      else
        throw std::invalid_argument("stup input: value must be [re,im] or number");
    }
    input.a.push_back(std::move(vals));
  }
  input.validate();
  return input;
}

Json stup_solution_to_json(const StupSolution& sol) {
  Json out;
  Json rows = Json::array();
  for (const auto& row : sol.roots) {
    Json jr = Json::array();
    for (const Complex& v : row) jr.push_back({v.real(), v.imag()});
    rows.push_back(std::move(jr));
  }
  out["rows"] = std::move(rows);
  out["residuals"] = sol.residuals;
  out["max_residual"] = sol.max_residual;
  return out;
}

}  // namespace goldie
