#pragma once

#include <json.hpp>

#include "tetra/forge.hpp"

namespace tetra {

using Json = nlohmann::ordered_json;

// Rationals travel as strings "p/q" (or "p" when the denominator is one);
// plain JSON integers are accepted on input.
Json mat_to_json(const Mat& m);
Mat mat_from_json(const Json& j, long expect_rows = -1, long expect_cols = -1);
Json vec_to_json(const Mat& v);
Mat vec_from_json(const Json& j);

Json space_to_json(const TwoVec& v);
TwoVec space_from_json(const Json& j);

Json leibniz2_to_json(const Leibniz2Algebra& l, const Mat* central = nullptr);
Leibniz2Algebra leibniz2_from_json(const Json& j);
bool leibniz2_json_central(const Json& j, Mat* out);

Json rack2_to_json(const Linear2Rack& rk);
Linear2Rack rack2_from_json(const Json& j);
std::vector<Mat> rack2_json_candidates(const Json& j, long dim_obj);

Json solution_to_json(const ZteSolution& sol);
ZteSolution solution_from_json(const Json& j);

Json report_to_json(const Report& rep);

Json fincat_to_json(const FinCat& c, const std::vector<std::string>& obj_names,
                    const std::vector<std::string>& mor_names);

struct NamedFinRack {
    FinCat cat;
    FinBifunctor lhd;
    bool has_inverse = false;
    FinBifunctor lhd_inv;
    bool has_distributor = false;
    RComponents r;
};

NamedFinRack finrack_from_json(const Json& j);
CrossedModule crossed_module_from_json(const Json& j);
Json conjugation_rack_to_json(const ConjugationRack& rack);

Json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const Json& j);

}  // namespace tetra
