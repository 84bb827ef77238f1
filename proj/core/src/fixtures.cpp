#include "flipbraid/fixtures.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <nlohmann/json.hpp>
#include <openssl/evp.h>

#include "flipbraid/delaunay.hpp"
#include "flipbraid/errors.hpp"
#include "flipbraid/flip_algebra.hpp"
#include "flipbraid/json_io.hpp"

#ifndef FLIPBRAID_DEFAULT_FIXTURE_DIR
#define FLIPBRAID_DEFAULT_FIXTURE_DIR "fixtures"
#endif

namespace flipbraid::fixtures {

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

fs::path default_directory() {
    if (const char* env = std::getenv("FLIPBRAID_FIXTURES"); env != nullptr && *env != '\0') return fs::path(env);
    return fs::path(FLIPBRAID_DEFAULT_FIXTURE_DIR);
}

std::string sha256_file(const fs::path& file) {
    std::ifstream in(file, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + file.string());
    EVP_MD_CTX* ctx = EVP_MD_CTX_new();
    if (ctx == nullptr || EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr) != 1) {
        EVP_MD_CTX_free(ctx);
        throw std::runtime_error("sha256 unavailable");
    }
    char buf[8192];
    while (in.read(buf, sizeof buf) || in.gcount() > 0) EVP_DigestUpdate(ctx, buf, static_cast<std::size_t>(in.gcount()));
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_DigestFinal_ex(ctx, digest, &len);
    EVP_MD_CTX_free(ctx);
    std::ostringstream hex;
    for (unsigned int k = 0; k < len; ++k) hex << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[k]);
    return hex.str();
}

std::vector<std::string> verify_manifest(const fs::path& dir) {
    std::ifstream in(dir / "MANIFEST.sha256");
    if (!in) return {"MANIFEST.sha256"};
    std::vector<std::string> bad;
    std::string digest;
    std::string name;
    while (in >> digest >> name) {
        const fs::path file = dir / name;
        if (!fs::exists(file) || sha256_file(file) != digest) bad.push_back(name);
    }
    return bad;
}

namespace {

class EntryParser {
public:
    EntryParser(std::string_view text, const Binding& zeta) : text_(text), zeta_(zeta) {}

    Rational parse() {
        const bool negative = accept('-');
        Rational value;
        if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            value = Rational::parse(text_.substr(pos_));
            pos_ = text_.size();
        } else {
            const Rational num = difference();
            expect('/');
            const Rational den = difference();
            if (den.is_zero()) throw std::domain_error("zero denominator in '" + std::string(text_) + "'");
            value = num / den;
        }
        if (pos_ != text_.size()) throw ParseError("trailing text in entry '" + std::string(text_) + "'", pos_);
        return negative ? -value : value;
    }

private:
    bool accept(char c) {
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c))
            throw ParseError("expected '" + std::string(1, c) + "' in entry '" + std::string(text_) + "'", pos_);
    }

    Rational symbol() {
        expect('z');
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start) throw ParseError("missing symbol name in entry '" + std::string(text_) + "'", pos_);
        return zeta_(text_.substr(start, pos_ - start));
    }

    Rational difference() {
        expect('(');
        const Rational a = symbol();
        expect('-');
        const Rational b = symbol();
        expect(')');
        return a - b;
    }

    std::string_view text_;
    const Binding& zeta_;
    std::size_t pos_ = 0;
};

Json read_json(const fs::path& file) {
    std::ifstream in(file);
    if (!in) throw std::runtime_error("cannot open fixture " + file.string());
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(file.filename().string() + ": " + e.what(), 0);
    }
}

SymbolicMatrix symbolic(const Json& j) {
    SymbolicMatrix m;
    m.rows = j.at("rows").get<std::size_t>();
    m.cols = j.at("cols").get<std::size_t>();
    for (const auto& row : j.at("entries")) {
        if (row.size() != m.cols) throw ParseError("fixture matrix row of wrong length", 0);
        for (const auto& e : row) m.entries.push_back(e.get<std::string>());
    }
    if (m.entries.size() != m.rows * m.cols) throw ParseError("fixture matrix with wrong row count", 0);
    return m;
}

std::vector<FlipLabel> flip_labels(const Json& j) {
    std::vector<FlipLabel> out;
    for (const auto& f : j) out.push_back(FlipLabel::parse(f.get<std::string>()));
    return out;
}

BraidFactorList factor_list(const Json& j) {
    BraidFactorList out;
    out.flips = flip_labels(j.at("flips"));
    for (const auto& m : j.at("factors")) out.factors.push_back(json::matrix_from_json(m));
    out.product = json::matrix_from_json(j.at("product"));
    if (out.flips.size() != out.factors.size()) throw ParseError("flip labels and factors differ in number", 0);
    return out;
}

Binding symbol_binding(const std::vector<std::string>& symbols) {
    return [symbols](std::string_view s) -> Rational {
        auto it = std::find(symbols.begin(), symbols.end(), s);
        if (it == symbols.end()) throw ParseError("unknown symbol z" + std::string(s), 0);
        return Rational(static_cast<long>(it - symbols.begin() + 1));
    };
}

std::string where(const RationalMatrix& got, const RationalMatrix& want) {
    if (got.rows() != want.rows() || got.cols() != want.cols()) return "shape " + got.shape() + " vs " + want.shape();
    const auto [r, c] = first_difference(got, want);
    if (r < 0) return {};
    const auto ur = static_cast<std::size_t>(r);
    const auto uc = static_cast<std::size_t>(c);
    return "first difference at (" + std::to_string(r) + ", " + std::to_string(c) + "): " + got(ur, uc).to_string() +
           " vs printed " + want(ur, uc).to_string();
}

RationalMatrix product_in_printed_order(const std::vector<RationalMatrix>& factors) {
    RationalMatrix p = factors.front();
    for (std::size_t k = 1; k < factors.size(); ++k) p = p * factors[k];
    return p;
}

// Values of the two columns that are not unit columns, sorted.
std::vector<Rational> active_entries(const RationalMatrix& m) {
    std::vector<Rational> values;
    for (std::size_t c = 0; c < m.cols(); ++c) {
        std::size_t ones = 0;
        std::size_t nonzero = 0;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (!m(r, c).is_zero()) ++nonzero;
            if (m(r, c) == Rational(1)) ++ones;
        }
        if (nonzero == 1 && ones == 1) continue;
        for (std::size_t r = 0; r < m.rows(); ++r)
            if (!m(r, c).is_zero()) values.push_back(m(r, c));
    }
    std::sort(values.begin(), values.end());
    return values;
}

FlipRoles label_roles(const FlipLabel& fl) {
    const auto idx = [](const std::string& s) { return std::stoi(s); };
    return FlipRoles{idx(fl.removed[0]), idx(fl.inserted[0]), idx(fl.removed[1]), idx(fl.inserted[1])};
}

bool carries(const RationalMatrix& f, const FlipLabel& fl) {
    const RationalMatrix block = flip_block(label_roles(fl), LabelMap::identity(f.rows()));
    std::vector<Rational> expected(block.entries().begin(), block.entries().end());
    std::sort(expected.begin(), expected.end());
    return active_entries(f) == expected;
}

std::array<int, 4> quad_of(const FlipLabel& fl) {
    const FlipRoles r = label_roles(fl);
    std::array<int, 4> q{r.i, r.j, r.k, r.l};
    std::sort(q.begin(), q.end());
    return q;
}

std::string describe(const FlipLabel& fl) { return fl.removed[0] + fl.removed[1] + "->" + fl.inserted[0] + fl.inserted[1]; }

// Checks every factor against its printed flip label. A label list may swap
// two adjacent far-commuting flips relative to the matrices; such swaps are
// reported in `notes` since they leave the product unchanged.
std::string check_factor_list(const std::string& label, const BraidFactorList& list, std::vector<std::string>& notes) {
    for (std::size_t k = 0; k < list.factors.size(); ++k) {
        const auto sums = column_sums(list.factors[k]);
        if (std::any_of(sums.begin(), sums.end(), [](const Rational& s) { return s != Rational(1); }))
            return label + " factor " + std::to_string(k) + " has a column sum other than 1";
    }
    for (std::size_t k = 0; k < list.factors.size(); ++k) {
        if (carries(list.factors[k], list.flips[k])) continue;
        const bool swapped = k + 1 < list.factors.size() && carries(list.factors[k], list.flips[k + 1]) &&
                             carries(list.factors[k + 1], list.flips[k]) &&
                             shared_vertices(quad_of(list.flips[k]), quad_of(list.flips[k + 1])) <= 2;
        if (!swapped)
            return label + " factor " + std::to_string(k) + " does not carry the coefficients of flip " +
                   describe(list.flips[k]);
        notes.push_back(label + " labels " + std::to_string(k) + "," + std::to_string(k + 1) + " (" +
                        describe(list.flips[k]) + ", " + describe(list.flips[k + 1]) +
                        ") are transposed relative to the matrices; the flips commute");
        ++k;
    }
    const std::string d = where(product_in_printed_order(list.factors), list.product);
    return d.empty() ? std::string{} : label + " product: " + d;
}

}  // namespace

Rational evaluate_entry(std::string_view text, const Binding& zeta) { return EntryParser(text, zeta).parse(); }

RationalMatrix SymbolicMatrix::evaluate(const Binding& zeta) const {
    std::vector<Rational> values;
    values.reserve(entries.size());
    for (const auto& e : entries) values.push_back(evaluate_entry(e, zeta));
    return RationalMatrix(rows, cols, std::move(values));
}

FlipLabel FlipLabel::parse(std::string_view text) {
    const auto arrow = text.find("->");
    if (arrow == std::string_view::npos || arrow != 2 || text.size() != 6)
        throw ParseError("flip label must look like 'ab->cd': '" + std::string(text) + "'", 0);
    FlipLabel f;
    f.removed[0] = std::string(1, text[0]);
    f.removed[1] = std::string(1, text[1]);
    f.inserted[0] = std::string(1, text[4]);
    f.inserted[1] = std::string(1, text[5]);
    return f;
}

Binding index_binding(const std::vector<Rational>& labels) {
    return [labels](std::string_view s) -> Rational {
        std::size_t k = 0;
        for (char c : s) {
            if (!std::isdigit(static_cast<unsigned char>(c))) throw ParseError("non-numeric symbol z" + std::string(s), 0);
            k = k * 10 + static_cast<std::size_t>(c - '0');
        }
        if (k < 1 || k > labels.size()) throw ParseError("no label for z" + std::string(s), 0);
        return labels[k - 1];
    };
}

PentagonFixture load_pentagon(const fs::path& dir) {
    const Json j = read_json(dir / "pentagon.json");
    PentagonFixture out;
    out.symbols = j.at("symbols").get<std::vector<std::string>>();
    for (const auto& s : j.at("steps")) {
        out.steps.push_back(PentagonStep{FlipLabel::parse(s.at("flip").get<std::string>()),
                                         s.at("from").get<std::vector<std::string>>(),
                                         s.at("to").get<std::vector<std::string>>(), symbolic(s.at("matrix"))});
    }
    return out;
}

CommutingFlipsFixture load_commuting_flips(const fs::path& dir) {
    const Json j = read_json(dir / "commuting_flips.json");
    CommutingFlipsFixture out;
    out.symbols = j.at("symbols").get<std::vector<std::string>>();
    for (const auto& o : j.at("orders")) {
        CommutingOrder order;
        order.flips = flip_labels(o.at("flips"));
        for (const auto& f : o.at("factors")) order.factors.push_back(symbolic(f));
        order.product = symbolic(o.at("product"));
        out.orders.push_back(std::move(order));
    }
    return out;
}

BraidCommutationFixture load_braid_commutation(const fs::path& dir) {
    const Json j = read_json(dir / "pure_braid_commutation.json");
    BraidCommutationFixture out;
    out.strands = j.at("strands").get<std::map<std::string, int>>();
    out.b_ij = factor_list(j.at("b_ij"));
    out.b_kl = factor_list(j.at("b_kl"));
    out.commuting_product = json::matrix_from_json(j.at("commuting_product"));
    return out;
}

SuiteResult run_pentagon_suite(const fs::path& dir) {
    SuiteResult result{"pentagon", false, {}};
    const PentagonFixture fx = load_pentagon(dir);
    const Binding zeta = symbol_binding(fx.symbols);
    const auto index = [&](const std::string& s) { return zeta(s).numerator().get_si(); };
    const LabelMap labels = LabelMap::identity(fx.symbols.size());
    RationalMatrix product = RationalMatrix::identity(3);
    for (std::size_t k = 0; k < fx.steps.size(); ++k) {
        const PentagonStep& step = fx.steps[k];
        const RationalMatrix printed = step.matrix.evaluate(zeta);
        const auto basis = [&](const std::vector<std::string>& names) {
            std::vector<Triangle> out;
            for (const auto& t : names)
                out.push_back(Triangle::of(static_cast<int>(index(t.substr(0, 1))), static_cast<int>(index(t.substr(1, 1))),
                                           static_cast<int>(index(t.substr(2, 1)))));
            return out;
        };
        const FlipRoles roles{static_cast<int>(index(step.flip.removed[0])), static_cast<int>(index(step.flip.inserted[0])),
                              static_cast<int>(index(step.flip.removed[1])), static_cast<int>(index(step.flip.inserted[1]))};
        const RationalMatrix built = build_flip_matrix(roles, basis(step.from), basis(step.to), labels);
        if (const std::string d = where(built, printed); !d.empty()) {
            result.detail = "step " + std::to_string(k + 1) + " builder vs printed: " + d;
            return result;
        }
        product = printed * product;
    }
    if (const std::string d = where(product, RationalMatrix::identity(3)); !d.empty()) {
        result.detail = "product is not the identity: " + d;
        return result;
    }
    result.passed = true;
    result.detail = "5 printed matrices match the builder; product = I3";
    return result;
}

SuiteResult run_commuting_flips_suite(const fs::path& dir) {
    SuiteResult result{"commuting flips", false, {}};
    const CommutingFlipsFixture fx = load_commuting_flips(dir);
    const Binding zeta = symbol_binding(fx.symbols);
    std::vector<RationalMatrix> products;
    for (std::size_t o = 0; o < fx.orders.size(); ++o) {
        std::vector<RationalMatrix> factors;
        for (const auto& f : fx.orders[o].factors) factors.push_back(f.evaluate(zeta));
        const RationalMatrix printed = fx.orders[o].product.evaluate(zeta);
        if (const std::string d = where(product_in_printed_order(factors), printed); !d.empty()) {
            result.detail = "order " + std::to_string(o + 1) + ": " + d;
            return result;
        }
        products.push_back(printed);
    }
    for (std::size_t o = 1; o < products.size(); ++o) {
        if (const std::string d = where(products[o], products[0]); !d.empty()) {
            result.detail = "the two orders disagree: " + d;
            return result;
        }
    }
    result.passed = true;
    result.detail = "both orders reproduce the printed 7x7 product";
    return result;
}

SuiteResult run_braid_commutation_suite(const fs::path& dir) {
    SuiteResult result{"pure braid commutation", false, {}};
    const BraidCommutationFixture fx = load_braid_commutation(dir);
    std::vector<std::string> notes;
    for (const auto& [label, list] : {std::pair{"b_ij", &fx.b_ij}, std::pair{"b_kl", &fx.b_kl}}) {
        if (std::string d = check_factor_list(label, *list, notes); !d.empty()) {
            result.detail = std::move(d);
            return result;
        }
    }
    if (const std::string d = where(fx.b_ij.product * fx.b_kl.product, fx.commuting_product); !d.empty()) {
        result.detail = "A_ij A_kl: " + d;
        return result;
    }
    if (const std::string d = where(fx.b_kl.product * fx.b_ij.product, fx.commuting_product); !d.empty()) {
        result.detail = "A_kl A_ij: " + d;
        return result;
    }
    result.passed = true;
    result.detail = std::to_string(fx.b_ij.factors.size()) + " + " + std::to_string(fx.b_kl.factors.size()) +
                    " factors reproduce both printed products, which commute to the printed result";
    for (const auto& note : notes) result.detail += "; note: " + note;
    return result;
}

std::vector<SuiteResult> run_all(const fs::path& dir) {
    std::vector<SuiteResult> out;
    const auto bad = verify_manifest(dir);
    SuiteResult manifest{"manifest", bad.empty(), {}};
    for (const auto& b : bad) manifest.detail += (manifest.detail.empty() ? "checksum mismatch: " : ", ") + b;
    if (bad.empty()) manifest.detail = "all checksums match";
    out.push_back(manifest);
    const auto guarded = [&](SuiteResult (*run)(const fs::path&), const char* name) {
        try {
            out.push_back(run(dir));
        } catch (const std::exception& e) {
            out.push_back(SuiteResult{name, false, e.what()});
        }
    };
    guarded(run_pentagon_suite, "pentagon");
    guarded(run_commuting_flips_suite, "commuting flips");
    guarded(run_braid_commutation_suite, "pure braid commutation");
    return out;
}

}  // namespace flipbraid::fixtures
