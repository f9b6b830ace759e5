#include "faber/serialize.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "faber/textio.hpp"

namespace faber {

namespace {

void expect(std::istream& is, const std::string& token) {
    std::string got;
    if (!(is >> got) || got != token)
        throw std::runtime_error("parse error: expected '" + token + "', got '" + got + "'");
}

template <typename T> T read_value(std::istream& is, const std::string& what) {
    T v{};
    if (!(is >> v)) throw std::runtime_error("parse error: bad " + what);
    return v;
}

Real read_real(std::istream& is, const std::string& what) {
    std::string tok;
    if (!(is >> tok)) throw std::runtime_error("parse error: bad " + what);
    return real_from_string(tok);
}

} // namespace

void write_expansion(std::ostream& os, const SparseFaberExpansion& e) {
    os << "faber-expansion 1\n";
    os << "dim " << e.dim() << "\n";
    os << "level " << e.budget_level() << "\n";
    os << "entries " << e.coefficient_count() << "\n";
    for (const auto& [levels, shifts] : e.levels())
        for (const auto& [s, c] : shifts) {
            for (int k : levels) os << k << ' ';
            for (long si : s) os << si << ' ';
            os << real_to_string(c) << "\n";
        }
}

SparseFaberExpansion read_expansion(std::istream& is) {
    expect(is, "faber-expansion");
    expect(is, "1");
    expect(is, "dim");
    int dim = read_value<int>(is, "dim");
    expect(is, "level");
    int level = read_value<int>(is, "level");
    expect(is, "entries");
    auto entries = read_value<long long>(is, "entry count");
    if (dim < 1 || level < 0 || entries < 0) throw std::runtime_error("parse error: bad expansion header");
    SparseFaberExpansion e(dim, level);
    MultiIndex k(static_cast<size_t>(dim));
    ShiftVector s(static_cast<size_t>(dim));
    for (long long i = 0; i < entries; ++i) {
        for (int q = 0; q < dim; ++q) k[static_cast<size_t>(q)] = read_value<int>(is, "level index");
        for (int q = 0; q < dim; ++q) s[static_cast<size_t>(q)] = read_value<long>(is, "shift index");
        e.set(k, s, read_real(is, "coefficient"));
    }
    return e;
}

void write_covering(std::ostream& os, const CoveringCode& code) {
    os << "covering-code 1\n";
    os << "dim " << code.dim << "\n";
    os << "level " << code.level << "\n";
    os << "alpha " << real_to_string(code.alpha) << "\n";
    os << "banks " << code.banks.size() << "\n";
    for (const auto& [key, univ] : code.banks) {
        os << "bank";
        for (int k : key.trail_levels) os << ' ' << k;
        for (long si : key.trail_shifts) os << ' ' << si;
        os << "\nl";
        for (long long v : univ.l) os << ' ' << v;
        os << "\n";
    }
}

CoveringCode read_covering(std::istream& is) {
    expect(is, "covering-code");
    expect(is, "1");
    expect(is, "dim");
    int dim = read_value<int>(is, "dim");
    expect(is, "level");
    int level = read_value<int>(is, "level");
    expect(is, "alpha");
    Real alpha = read_real(is, "alpha");
    expect(is, "banks");
    auto count = read_value<long long>(is, "bank count");
    if (dim < 1 || level < 0 || count < 0) throw std::runtime_error("parse error: bad covering header");
    CoveringCode code{dim, level, alpha, {}};
    for (long long b = 0; b < count; ++b) {
        expect(is, "bank");
        BankKey key;
        key.trail_levels.resize(static_cast<size_t>(dim - 1));
        key.trail_shifts.resize(static_cast<size_t>(dim - 1));
        for (int q = 0; q < dim - 1; ++q) key.trail_levels[static_cast<size_t>(q)] = read_value<int>(is, "bank level");
        for (int q = 0; q < dim - 1; ++q) key.trail_shifts[static_cast<size_t>(q)] = read_value<long>(is, "bank shift");
        long sum = static_cast<long>(level_sum(key.trail_levels));
        if (sum > level) throw std::runtime_error("parse error: bank level outside budget");
        int sub_level = level - static_cast<int>(sum);
        expect(is, "l");
        UnivariateQuantizedCode univ{sub_level, alpha, {}};
        long n = 1L << (sub_level + 1);
        univ.l.resize(static_cast<size_t>(n));
        for (long q = 0; q < n; ++q) univ.l[static_cast<size_t>(q)] = read_value<long long>(is, "code integer");
        if (univ.l[0] != 0) throw std::runtime_error("parse error: code must start at level 0");
        code.banks.emplace(std::move(key), std::move(univ));
    }
    if (static_cast<long long>(code.banks.size()) != count)
        throw std::runtime_error("parse error: duplicate bank keys");
    for (const auto& kbar : enumerate_levels(dim - 1, level))
        for (const auto& sbar : enumerate_shifts(kbar))
            if (!code.banks.contains(BankKey{kbar, sbar}))
                throw std::runtime_error("parse error: missing bank");
    return code;
}

void write_manifold(std::ostream& os, const ManifoldCode& code) {
    os << "manifold-code 1\n";
    os << "dim " << code.dim << "\n";
    os << "alpha " << real_to_string(code.alpha) << "\n";
    os << "m " << code.m << "\n";
    os << "n " << code.n << "\n";
    os << "lambda_R\n";
    write_expansion(os, code.lambda_R);
    for (const auto& layer : code.layers) {
        os << "layer " << layer.j << "\n";
        os << "dictionary " << layer.dictionary.size() << "\n";
        for (const auto& entry : layer.dictionary) write_covering(os, entry);
        os << "theta " << layer.theta.size() << "\n";
        for (size_t i = 0; i < layer.theta.size(); ++i)
            os << layer.theta[i] << (i + 1 == layer.theta.size() ? "\n" : " ");
        if (layer.theta.empty()) os << "\n";
    }
    os << "end\n";
}

ManifoldCode read_manifold(std::istream& is) {
    expect(is, "manifold-code");
    expect(is, "1");
    ManifoldCode code;
    expect(is, "dim");
    code.dim = read_value<int>(is, "dim");
    expect(is, "alpha");
    code.alpha = read_real(is, "alpha");
    expect(is, "m");
    code.m = read_value<int>(is, "m");
    expect(is, "n");
    code.n = read_value<int>(is, "n");
    if (code.dim < 1 || code.m < 0 || code.n < 0) throw std::runtime_error("parse error: bad manifold header");
    expect(is, "lambda_R");
    code.lambda_R = read_expansion(is);
    if (code.lambda_R.dim() != code.dim || code.lambda_R.budget_level() != code.n)
        throw std::runtime_error("parse error: truncation block mismatch");
    code.layers.resize(static_cast<size_t>(code.dim));
    for (int j = 0; j < code.dim; ++j) {
        expect(is, "layer");
        if (read_value<int>(is, "layer index") != j) throw std::runtime_error("parse error: layer order");
        LayerCode& layer = code.layers[static_cast<size_t>(j)];
        layer.j = j;
        expect(is, "dictionary");
        auto dict_count = read_value<long long>(is, "dictionary size");
        for (long long q = 0; q < dict_count; ++q) {
            CoveringCode entry = read_covering(is);
            if (entry.dim != code.dim - j || entry.level != code.m)
                throw std::runtime_error("parse error: dictionary entry shape mismatch");
            layer.dictionary.push_back(std::move(entry));
        }
        expect(is, "theta");
        auto theta_count = read_value<long long>(is, "theta count");
        if (theta_count != gamma_size(j, code.n))
            throw std::runtime_error("parse error: assignment table size mismatch");
        layer.theta.resize(static_cast<size_t>(theta_count));
        for (long long q = 0; q < theta_count; ++q) {
            int v = read_value<int>(is, "theta");
            if (v < 1 || v > static_cast<int>(layer.dictionary.size()))
                throw std::runtime_error("parse error: assignment outside dictionary");
            layer.theta[static_cast<size_t>(q)] = v;
        }
    }
    expect(is, "end");
    return code;
}

std::string to_string(const SparseFaberExpansion& e) {
    std::ostringstream os;
    write_expansion(os, e);
    return os.str();
}

std::string to_string(const ManifoldCode& code) {
    std::ostringstream os;
    write_manifold(os, code);
    return os.str();
}

SparseFaberExpansion expansion_from_string(const std::string& text) {
    std::istringstream is(text);
    return read_expansion(is);
}

ManifoldCode manifold_from_string(const std::string& text) {
    std::istringstream is(text);
    return read_manifold(is);
}

void save_manifold(const std::string& path, const ManifoldCode& code) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open '" + path + "' for writing");
    write_manifold(os, code);
}

ManifoldCode load_manifold(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot open '" + path + "'");
    return read_manifold(is);
}

} // namespace faber
