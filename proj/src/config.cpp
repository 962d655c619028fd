#include "premon/config.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "premon/kexpr.hpp"
#include "premon/stext.hpp"

namespace premon {

GammaValue parse_gamma(const std::string& text) {
    // rational forms first; anything with 'i' or a decimal point is complex
    if (text.find('i') == std::string::npos && text.find('.') == std::string::npos)
        return GammaValue::exact(parse_rational(text));
    std::string s = text;
    s.erase(std::remove_if(s.begin(), s.end(), ::isspace), s.end());
    double re = 0.0, im = 0.0;
    if (s.size() >= 2 && s.front() == '(' && s.back() == ')') {
        std::string body = s.substr(1, s.size() - 2);
        auto comma = body.find(',');
        if (comma == std::string::npos)
            throw ParseError(1, 1, "complex gamma pair needs '(re, im)'");
        re = std::stod(body.substr(0, comma));
        im = std::stod(body.substr(comma + 1));
        return GammaValue::approx({re, im});
    }
    // a+bi / a-bi / bi / a
    std::size_t split = std::string::npos;
    for (std::size_t i = 1; i < s.size(); ++i)
        if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') split = i;
    if (s.back() == 'i') {
        if (split == std::string::npos) {
            std::string imag = s.substr(0, s.size() - 1);
            im = imag.empty() || imag == "+" ? 1.0 : (imag == "-" ? -1.0 : std::stod(imag));
        } else {
            re = std::stod(s.substr(0, split));
            std::string imag = s.substr(split, s.size() - 1 - split);
            im = imag == "+" ? 1.0 : (imag == "-" ? -1.0 : std::stod(imag));
        }
    } else {
        re = std::stod(s);
    }
    return GammaValue::approx({re, im});
}

namespace {

long parse_long(const std::string& s, int line) {
    try {
        std::size_t used = 0;
        long v = std::stol(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw ParseError(line, 1, "expected integer, got '" + s + "'");
    }
}

bool parse_bool(const std::string& s, int line) {
    if (s == "true" || s == "yes" || s == "1") return true;
    if (s == "false" || s == "no" || s == "0") return false;
    throw ParseError(line, 1, "expected boolean, got '" + s + "'");
}

} // namespace

RunConfig parse_config(const std::string& text) {
    RunConfig cfg;
    auto sections = parse_stext(text);
    bool saw_twining = false;
    std::ostringstream inline_algebra;
    bool has_inline = false;

    for (const auto& sec : sections) {
        if (sec.name == "algebra") {
            for (const auto& e : sec.entries) {
                if (e.key == "name") {
                    cfg.algebra_name = e.value.scalar;
                } else if (e.key == "file") {
                    cfg.algebra_file = e.value.scalar;
                } else if (e.key == "basis" || e.key.rfind("bracket.", 0) == 0) {
                    has_inline = true;
                } else {
                    throw ParseError(e.line, 1, "unknown [algebra] key: " + e.key);
                }
            }
            if (has_inline) {
                // keep the raw section for load_algebra
                std::istringstream in(text);
                std::string line;
                bool inside = false;
                while (std::getline(in, line)) {
                    std::string stripped = line;
                    stripped.erase(0, stripped.find_first_not_of(" \t"));
                    if (stripped.rfind("[algebra]", 0) == 0) {
                        inside = true;
                        inline_algebra << "[algebra]\n";
                        continue;
                    }
                    if (inside && !stripped.empty() && stripped.front() == '[') inside = false;
                    if (inside) inline_algebra << line << "\n";
                }
                std::string body = inline_algebra.str();
                while (body.size() > 1 && body[body.size() - 1] == '\n' &&
                       body[body.size() - 2] == '\n')
                    body.pop_back();
                cfg.algebra_inline = body;
            }
        } else if (sec.name == "modules") {
            for (const auto& e : sec.entries) {
                if (e.key == "gl1_weights") {
                    if (e.value.kind != STextValue::Kind::List)
                        throw ParseError(e.line, 1, "gl1_weights must be a list");
                    for (const auto& s : e.value.list)
                        cfg.gl1_weights.push_back(parse_long(s, e.line));
                } else if (e.key == "sl2_two_j") {
                    if (e.value.kind != STextValue::Kind::List)
                        throw ParseError(e.line, 1, "sl2_two_j must be a list");
                    for (const auto& s : e.value.list) {
                        long v = parse_long(s, e.line);
                        if (v < 0) throw ParseError(e.line, 1, "two_j must be >= 0");
                        cfg.sl2_two_j.push_back(v);
                    }
                } else if (e.key == "file") {
                    cfg.modules_file = e.value.scalar;
                } else {
                    throw ParseError(e.line, 1, "unknown [modules] key: " + e.key);
                }
            }
        } else if (sec.name == "twining") {
            saw_twining = true;
            for (const auto& e : sec.entries) {
                if (e.key == "K") {
                    cfg.k_expr = e.value.scalar;
                } else if (e.key == "gamma") {
                    cfg.gamma = parse_gamma(e.value.scalar);
                } else if (e.key == "require_S_odd") {
                    cfg.require_S_odd = parse_bool(e.value.scalar, e.line);
                } else {
                    throw ParseError(e.line, 1, "unknown [twining] key: " + e.key);
                }
            }
        } else if (sec.name == "checks") {
            for (const auto& e : sec.entries) {
                if (e.key == "run") {
                    if (e.value.kind != STextValue::Kind::List)
                        throw ParseError(e.line, 1, "run must be a list of check names");
                    for (const auto& s : e.value.list) {
                        if (!known_checks().count(s))
                            throw ParseError(e.line, 1, "unknown check: " + s);
                        cfg.checks.push_back(s);
                    }
                } else if (e.key == "max_tuple_rank") {
                    cfg.max_tuple_rank = static_cast<int>(parse_long(e.value.scalar, e.line));
                } else {
                    throw ParseError(e.line, 1, "unknown [checks] key: " + e.key);
                }
            }
        } else {
            throw ParseError(sec.line, 1, "unknown section [" + sec.name + "]");
        }
    }

    std::sort(cfg.checks.begin(), cfg.checks.end());
    cfg.checks.erase(std::unique(cfg.checks.begin(), cfg.checks.end()), cfg.checks.end());

    if (cfg.algebra_name.empty() && cfg.algebra_file.empty() && cfg.algebra_inline.empty())
        throw ParseError(1, 1, "config names no algebra");
    if (!cfg.algebra_name.empty() && cfg.algebra_name != "gl1" && cfg.algebra_name != "sl2")
        throw ParseError(1, 1, "unknown builtin algebra: " + cfg.algebra_name);
    if (cfg.gl1_weights.empty() && cfg.sl2_two_j.empty() && cfg.modules_file.empty())
        throw ParseError(1, 1, "config lists no modules");
    if (cfg.checks.empty()) throw ParseError(1, 1, "config selects no checks");
    if (!saw_twining || cfg.k_expr.empty())
        throw ParseError(1, 1, "config must define K in [twining]");
    if (cfg.max_tuple_rank < 2 || cfg.max_tuple_rank > 4)
        throw ParseError(1, 1, "max_tuple_rank must be in 2..4");
    return cfg;
}

std::string emit_config(const RunConfig& cfg) {
    std::ostringstream os;
    os << "[algebra]\n";
    if (!cfg.algebra_name.empty()) os << "name = " << cfg.algebra_name << "\n";
    if (!cfg.algebra_file.empty()) os << "file = " << cfg.algebra_file << "\n";
    if (!cfg.algebra_inline.empty()) {
        // inline presentations re-emit their body below the header
        std::istringstream in(cfg.algebra_inline);
        std::string line;
        std::getline(in, line);  // "[algebra]"
        while (std::getline(in, line)) os << line << "\n";
    }
    os << "\n[modules]\n";
    auto emit_list = [&](const std::string& key, const auto& xs) {
        if (xs.empty()) return;
        os << key << " = [";
        for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? ", " : "") << xs[i];
        os << "]\n";
    };
    emit_list("gl1_weights", cfg.gl1_weights);
    emit_list("sl2_two_j", cfg.sl2_two_j);
    if (!cfg.modules_file.empty()) os << "file = " << cfg.modules_file << "\n";
    os << "\n[twining]\n";
    os << "K = " << cfg.k_expr << "\n";
    os << "gamma = " << cfg.gamma.str() << "\n";
    os << "require_S_odd = " << (cfg.require_S_odd ? "true" : "false") << "\n";
    os << "\n[checks]\n";
    emit_list("run", cfg.checks);
    os << "max_tuple_rank = " << cfg.max_tuple_rank << "\n";
    return os.str();
}

namespace {

std::vector<ModuleRep> load_modules_file(const AlgebraPtr& algebra,
                                         const std::string& path) {
    std::ifstream in(path);
    if (!in) throw AlgebraError("cannot open modules file: " + path);
    nlohmann::json doc = nlohmann::json::parse(in);
    std::vector<ModuleRep> out;
    for (const auto& entry : doc) {
        std::size_t dim = entry.at("dim").get<std::size_t>();
        std::string label = entry.at("label").get<std::string>();
        std::map<std::string, RationalMatrix> action;
        for (const auto& [gen, rows] : entry.at("action").items()) {
            RationalMatrix m(dim, dim);
            for (std::size_t i = 0; i < dim; ++i)
                for (std::size_t j = 0; j < dim; ++j)
                    m.at(i, j) = parse_rational(rows.at(i).at(j).get<std::string>());
            action.emplace(gen, std::move(m));
        }
        out.emplace_back(algebra, dim, std::move(action), std::move(label));
    }
    return out;
}

} // namespace

Instance build_instance(const RunConfig& cfg) {
    Instance inst;
    if (cfg.algebra_name == "gl1") {
        inst.algebra = builtin_gl1();
    } else if (cfg.algebra_name == "sl2") {
        inst.algebra = builtin_sl2();
    } else if (!cfg.algebra_inline.empty()) {
        inst.algebra = load_algebra(cfg.algebra_inline);
    } else {
        std::ifstream in(cfg.algebra_file);
        if (!in) throw AlgebraError("cannot open algebra file: " + cfg.algebra_file);
        std::ostringstream os;
        os << in.rdbuf();
        inst.algebra = load_algebra(os.str());
    }

    if (!cfg.gl1_weights.empty() && inst.algebra != builtin_gl1())
        throw AlgebraError("gl1_weights requires the gl1 algebra");
    if (!cfg.sl2_two_j.empty() && inst.algebra != builtin_sl2())
        throw AlgebraError("sl2_two_j requires the sl2 algebra");

    for (long w : cfg.gl1_weights) inst.modules.push_back(build_gl1_module(w));
    for (long j2 : cfg.sl2_two_j)
        inst.modules.push_back(build_sl2_module(static_cast<unsigned long>(j2)));
    if (!cfg.modules_file.empty()) {
        auto extra = load_modules_file(inst.algebra, cfg.modules_file);
        for (auto& m : extra) inst.modules.push_back(std::move(m));
    }
    inst.k = parse_poly_expr(cfg.k_expr, inst.algebra);
    return inst;
}

} // namespace premon
