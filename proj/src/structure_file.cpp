#include "l2b/structure_file.hpp"

#include <json.hpp>

namespace l2b {

namespace {

using json = nlohmann::ordered_json;

Rational parse_rational_at(const json& j, const std::string& path) {
    if (!j.is_string())
        throw ParseError(path + ": expected a rational string like \"-2/3\" (floats are not accepted)");
    try {
        return Rational::parse(j.get<std::string>());
    } catch (const std::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
}

const json& field_at(const json& j, const std::string& key, const std::string& path) {
    auto it = j.find(key);
    if (it == j.end()) throw ParseError(path + ": missing required key '" + key + "'");
    return *it;
}

void reject_unknown(const json& j, std::initializer_list<const char*> known,
                    const std::string& path) {
    for (auto it = j.begin(); it != j.end(); ++it) {
        bool ok = false;
        for (const char* k : known)
            if (it.key() == k) {
                ok = true;
                break;
            }
        if (!ok) throw ParseError(path + ": unknown key '" + it.key() + "'");
    }
}

int int_at(const json& j, const std::string& path) {
    if (!j.is_number_integer() || j.get<int64_t>() < 0)
        throw ParseError(path + ": expected a nonnegative integer");
    return static_cast<int>(j.get<int64_t>());
}

const json& array_of(const json& j, size_t n, const std::string& path) {
    if (!j.is_array() || j.size() != n)
        throw ParseError(path + ": expected an array of length " + std::to_string(n));
    return j;
}

RatMat parse_matrix(const json& j, int d0, int d1, const std::string& path) {
    array_of(j, d0, path);
    RatMat m = zero_matrix(d0, d1);
    for (int i = 0; i < d0; ++i) {
        const json& row = array_of(j[i], d1, path + "[" + std::to_string(i) + "]");
        for (int k = 0; k < d1; ++k)
            m[i][k] = parse_rational_at(row[k],
                                        path + "[" + std::to_string(i) + "][" + std::to_string(k) + "]");
    }
    return m;
}

Tensor3 parse_tensor3(const json& j, int d0, int d1, int d2, const std::string& path) {
    array_of(j, d0, path);
    Tensor3 t(d0, d1, d2);
    for (int i = 0; i < d0; ++i) {
        std::string pi = path + "[" + std::to_string(i) + "]";
        const json& ji = array_of(j[i], d1, pi);
        for (int k = 0; k < d1; ++k) {
            std::string pk = pi + "[" + std::to_string(k) + "]";
            const json& jk = array_of(ji[k], d2, pk);
            for (int l = 0; l < d2; ++l)
                t.at(i, k, l) = parse_rational_at(jk[l], pk + "[" + std::to_string(l) + "]");
        }
    }
    return t;
}

Tensor4 parse_tensor4(const json& j, int d0, int d1, int d2, int d3, const std::string& path) {
    array_of(j, d0, path);
    Tensor4 t(d0, d1, d2, d3);
    for (int i = 0; i < d0; ++i) {
        std::string pi = path + "[" + std::to_string(i) + "]";
        const json& ji = array_of(j[i], d1, pi);
        for (int k = 0; k < d1; ++k) {
            std::string pk = pi + "[" + std::to_string(k) + "]";
            const json& jk = array_of(ji[k], d2, pk);
            for (int l = 0; l < d2; ++l) {
                std::string pl = pk + "[" + std::to_string(l) + "]";
                const json& jl = array_of(jk[l], d3, pl);
                for (int m = 0; m < d3; ++m)
                    t.at(i, k, l, m) = parse_rational_at(jl[m], pl + "[" + std::to_string(m) + "]");
            }
        }
    }
    return t;
}

void check_skew3(const Tensor3& t, const std::string& name) {
    for (int i = 0; i < t.dim(0); ++i)
        for (int j = 0; j < t.dim(1); ++j)
            for (int k = 0; k < t.dim(2); ++k)
                if (!(t.at(i, j, k) + t.at(j, i, k)).is_zero())
                    throw ParseError("tensors." + name + ": must be skew in the first two slots (entry [" +
                                     std::to_string(i) + "][" + std::to_string(j) + "][" +
                                     std::to_string(k) + "])");
}

void check_alt4(const Tensor4& t, const std::string& name) {
    for (int i = 0; i < t.dim(0); ++i)
        for (int j = 0; j < t.dim(1); ++j)
            for (int k = 0; k < t.dim(2); ++k)
                for (int m = 0; m < t.dim(3); ++m)
                    if (!(t.at(i, j, k, m) + t.at(j, i, k, m)).is_zero() ||
                        !(t.at(i, j, k, m) + t.at(i, k, j, m)).is_zero())
                        throw ParseError("tensors." + name +
                                         ": must be alternating in the first three slots");
}

json matrix_to_json(const RatMat& m) {
    json out = json::array();
    for (const auto& row : m) {
        json r = json::array();
        for (const auto& v : row) r.push_back(v.to_string());
        out.push_back(r);
    }
    return out;
}

json tensor3_to_json(const Tensor3& t) {
    json out = json::array();
    for (int i = 0; i < t.dim(0); ++i) {
        json a = json::array();
        for (int j = 0; j < t.dim(1); ++j) {
            json b = json::array();
            for (int k = 0; k < t.dim(2); ++k) b.push_back(t.at(i, j, k).to_string());
            a.push_back(b);
        }
        out.push_back(a);
    }
    return out;
}

json tensor4_to_json(const Tensor4& t) {
    json out = json::array();
    for (int i = 0; i < t.dim(0); ++i) {
        json a = json::array();
        for (int j = 0; j < t.dim(1); ++j) {
            json b = json::array();
            for (int k = 0; k < t.dim(2); ++k) {
                json c = json::array();
                for (int m = 0; m < t.dim(3); ++m) c.push_back(t.at(i, j, k, m).to_string());
                b.push_back(c);
            }
            a.push_back(b);
        }
        out.push_back(a);
    }
    return out;
}

bool mat_is_zero(const RatMat& m) {
    for (const auto& row : m)
        for (const auto& v : row)
            if (!v.is_zero()) return false;
    return true;
}

bool t3_is_zero(const Tensor3& t) {
    for (int i = 0; i < t.dim(0); ++i)
        for (int j = 0; j < t.dim(1); ++j)
            for (int k = 0; k < t.dim(2); ++k)
                if (!t.at(i, j, k).is_zero()) return false;
    return true;
}

bool t4_is_zero(const Tensor4& t) {
    for (int i = 0; i < t.dim(0); ++i)
        for (int j = 0; j < t.dim(1); ++j)
            for (int k = 0; k < t.dim(2); ++k)
                for (int m = 0; m < t.dim(3); ++m)
                    if (!t.at(i, j, k, m).is_zero()) return false;
    return true;
}

}  // namespace

StructureFile parse_structure_file(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw ParseError("top level: expected an object");
    reject_unknown(j, {"version", "space", "tensors", "element"}, "top level");

    const json& ver = field_at(j, "version", "top level");
    if (!ver.is_string() || ver.get<std::string>() != "1")
        throw ParseError("version: expected \"1\"");

    StructureFile f;
    const json& sp = field_at(j, "space", "top level");
    if (!sp.is_object()) throw ParseError("space: expected an object");
    reject_unknown(sp, {"dim_g", "dim_theta", "labels_g", "labels_theta"}, "space");
    f.space.dim_g = int_at(field_at(sp, "dim_g", "space"), "space.dim_g");
    f.space.dim_theta = int_at(field_at(sp, "dim_theta", "space"), "space.dim_theta");
    for (const char* key : {"labels_g", "labels_theta"}) {
        auto it = sp.find(key);
        if (it == sp.end()) continue;
        if (!it->is_array()) throw ParseError(std::string("space.") + key + ": expected an array");
        auto& dst = key == std::string("labels_g") ? f.space.labels_g : f.space.labels_theta;
        for (const auto& v : *it) {
            if (!v.is_string())
                throw ParseError(std::string("space.") + key + ": expected strings");
            dst.push_back(v.get<std::string>());
        }
    }
    try {
        f.space.validate();
    } catch (const std::exception& e) {
        throw ParseError(std::string("space: ") + e.what());
    }

    int g = f.space.dim_g, t = f.space.dim_theta;
    if (auto it = j.find("tensors"); it != j.end()) {
        if (!it->is_object()) throw ParseError("tensors: expected an object");
        reject_unknown(*it,
                       {"phi", "bracket", "action", "homotopy_h", "delta", "omega", "eta",
                        "dual_bracket", "dual_action"},
                       "tensors");
        const json& ts = *it;
        if (auto f2 = ts.find("phi"); f2 != ts.end())
            f.phi = parse_matrix(*f2, g, t, "tensors.phi");
        if (auto f2 = ts.find("bracket"); f2 != ts.end()) {
            f.bracket = parse_tensor3(*f2, g, g, g, "tensors.bracket");
            check_skew3(*f.bracket, "bracket");
        }
        if (auto f2 = ts.find("action"); f2 != ts.end())
            f.action = parse_tensor3(*f2, g, t, t, "tensors.action");
        if (auto f2 = ts.find("homotopy_h"); f2 != ts.end()) {
            f.homotopy_h = parse_tensor4(*f2, g, g, g, t, "tensors.homotopy_h");
            check_alt4(*f.homotopy_h, "homotopy_h");
        }
        if (auto f2 = ts.find("delta"); f2 != ts.end())
            f.delta = parse_tensor3(*f2, g, g, t, "tensors.delta");
        if (auto f2 = ts.find("omega"); f2 != ts.end()) {
            Tensor3 om = parse_tensor3(*f2, t, t, t, "tensors.omega");
            for (int a = 0; a < t; ++a)
                for (int b = 0; b < t; ++b)
                    for (int c = 0; c < t; ++c)
                        if (!(om.at(a, b, c) + om.at(a, c, b)).is_zero())
                            throw ParseError("tensors.omega: must be skew in the last two slots");
            f.omega = std::move(om);
        }
        if (auto f2 = ts.find("eta"); f2 != ts.end()) {
            f.eta = parse_tensor4(*f2, t, t, t, g, "tensors.eta");
            check_alt4(*f.eta, "eta");
        }
        if (auto f2 = ts.find("dual_bracket"); f2 != ts.end()) {
            f.dual_bracket = parse_tensor3(*f2, t, t, t, "tensors.dual_bracket");
            check_skew3(*f.dual_bracket, "dual_bracket");
        }
        if (auto f2 = ts.find("dual_action"); f2 != ts.end())
            f.dual_action = parse_tensor3(*f2, t, g, g, "tensors.dual_action");
    }
    if (auto it = j.find("element"); it != j.end()) {
        if (!it->is_string()) throw ParseError("element: expected a string");
        f.element = it->get<std::string>();
    }
    return f;
}

std::string serialize_structure_file(const StructureFile& f) {
    json j;
    j["version"] = "1";
    json sp;
    sp["dim_g"] = f.space.dim_g;
    sp["dim_theta"] = f.space.dim_theta;
    if (!f.space.labels_g.empty()) sp["labels_g"] = f.space.labels_g;
    if (!f.space.labels_theta.empty()) sp["labels_theta"] = f.space.labels_theta;
    j["space"] = sp;

    json ts = json::object();
    if (f.phi && !mat_is_zero(*f.phi)) ts["phi"] = matrix_to_json(*f.phi);
    if (f.bracket && !t3_is_zero(*f.bracket)) ts["bracket"] = tensor3_to_json(*f.bracket);
    if (f.action && !t3_is_zero(*f.action)) ts["action"] = tensor3_to_json(*f.action);
    if (f.homotopy_h && !t4_is_zero(*f.homotopy_h)) ts["homotopy_h"] = tensor4_to_json(*f.homotopy_h);
    if (f.delta && !t3_is_zero(*f.delta)) ts["delta"] = tensor3_to_json(*f.delta);
    if (f.omega && !t3_is_zero(*f.omega)) ts["omega"] = tensor3_to_json(*f.omega);
    if (f.eta && !t4_is_zero(*f.eta)) ts["eta"] = tensor4_to_json(*f.eta);
    if (f.dual_bracket && !t3_is_zero(*f.dual_bracket))
        ts["dual_bracket"] = tensor3_to_json(*f.dual_bracket);
    if (f.dual_action && !t3_is_zero(*f.dual_action))
        ts["dual_action"] = tensor3_to_json(*f.dual_action);
    if (!ts.empty()) j["tensors"] = ts;
    if (f.element) j["element"] = *f.element;
    return j.dump(2) + "\n";
}

} // namespace l2b
