#ifndef JPN_IO_HPP
#define JPN_IO_HPP

// JSON (de)serialization of structure-constant tables.
//
// Format: {"basis": [{"name": ..., "parity": 0|1}, ...],
//          "products": [{"i": int, "j": int,
//                        "terms": [{"k": int, "coef": rational}, ...]}, ...]}
// with rationals as {"num": decimal-string, "den": decimal-string};
// (i, j) pairs absent from "products" multiply to zero.  Extensions carry an
// extra "radical" list of basis indices.

#include "bimodule.hpp"
#include "graded.hpp"
#include "rational.hpp"

#include <json.hpp>

#include <string>

namespace jpn {

using Json = nlohmann::ordered_json;

inline Json rat_to_json(const Rat& r) {
    return Json{{"num", num_str(r)}, {"den", den_str(r)}};
}

inline Rat rat_from_json(const Json& j) {
    Int num(j.at("num").get<std::string>());
    Int den(j.at("den").get<std::string>());
    if (den <= 0) throw std::invalid_argument("denominator must be positive");
    return Rat(num, den);
}

inline Json algebra_to_json(const Algebra<Rat>& alg) {
    Json j;
    j["basis"] = Json::array();
    for (auto& b : alg.basis())
        j["basis"].push_back(Json{{"name", b.name}, {"parity", b.parity}});
    j["products"] = Json::array();
    for (std::size_t i = 0; i < alg.dim(); ++i)
        for (std::size_t k = 0; k < alg.dim(); ++k) {
            const auto& p = alg.product(i, k);
            if (p.empty()) continue;
            Json terms = Json::array();
            for (auto& t : p)
                terms.push_back(Json{{"k", t.k}, {"coef", rat_to_json(t.c)}});
            j["products"].push_back(
                Json{{"i", i}, {"j", k}, {"terms", std::move(terms)}});
        }
    return j;
}

inline Json extension_to_json(const Extension& ext) {
    Json j = algebra_to_json(ext.alg);
    j["radical"] = Json::array();
    for (auto m : ext.radical()) j["radical"].push_back(m);
    return j;
}

inline Algebra<Rat> algebra_from_json(const Json& j) {
    std::vector<BasisElem> basis;
    for (auto& b : j.at("basis"))
        basis.push_back({b.at("name").get<std::string>(),
                         b.at("parity").get<int>()});
    Algebra<Rat> alg(std::move(basis));
    for (auto& p : j.at("products")) {
        std::size_t i = p.at("i").get<std::size_t>();
        std::size_t k = p.at("j").get<std::size_t>();
        if (i >= alg.dim() || k >= alg.dim())
            throw std::invalid_argument("product index out of range");
        SparseVec<Rat> v;
        for (auto& t : p.at("terms")) {
            std::size_t idx = t.at("k").get<std::size_t>();
            if (idx >= alg.dim())
                throw std::invalid_argument("term index out of range");
            v.push_back({idx, rat_from_json(t.at("coef"))});
        }
        alg.set_product(i, k, std::move(v));
    }
    return alg;
}

} // namespace jpn

#endif
