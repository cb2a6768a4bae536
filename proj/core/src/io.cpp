#include "omfib/io.hpp"

#include <istream>
#include <sstream>

namespace omfib {

ParseError::ParseError(const std::string& what, int line_no)
    : std::runtime_error("line " + std::to_string(line_no) + ": " + what), line(line_no) {}

namespace {

// strips comments and surrounding whitespace; empty result means skip
std::string clean_line(const std::string& raw) {
    std::string s = raw;
    if (auto pos = s.find('#'); pos != std::string::npos) s.erase(pos);
    auto is_space = [](unsigned char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
    size_t b = 0, e = s.size();
    while (b < e && is_space(s[b])) ++b;
    while (e > b && is_space(s[e - 1])) --e;
    return s.substr(b, e - b);
}

struct LineReader {
    std::istream& in;
    int line_no = 0;
    bool next(std::string& out) {
        std::string raw;
        while (std::getline(in, raw)) {
            ++line_no;
            out = clean_line(raw);
            if (!out.empty()) return true;
        }
        return false;
    }
};

Rational parse_rational(const std::string& tok, int line) {
    try {
        auto slash = tok.find('/');
        if (slash == std::string::npos) return Rational(mpz_class(tok));
        mpz_class num(tok.substr(0, slash));
        mpz_class den(tok.substr(slash + 1));
        if (den == 0) throw ParseError("zero denominator", line);
        Rational q(num, den);
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        throw ParseError("invalid rational '" + tok + "'", line);
    }
}

}  // namespace

Arrangement parse_arrangement(std::istream& in) {
    LineReader r{in};
    std::string line;
    if (!r.next(line)) throw ParseError("empty file", r.line_no);
    std::istringstream head(line);
    std::string tag;
    uint32_t dim = 0, n = 0;
    if (!(head >> tag >> dim >> n) || tag != "arr")
        throw ParseError("expected 'arr <dim> <n>'", r.line_no);
    if (dim == 0) throw ParseError("dimension must be positive", r.line_no);

    Arrangement arr;
    arr.dim = dim;
    for (uint32_t i = 0; i < n; ++i) {
        if (!r.next(line)) throw ParseError("expected " + std::to_string(n) + " normals", r.line_no);
        std::istringstream row(line);
        std::vector<Rational> normal;
        std::string tok;
        while (row >> tok) normal.push_back(parse_rational(tok, r.line_no));
        if (normal.size() != dim)
            throw ParseError("expected " + std::to_string(dim) + " entries", r.line_no);
        arr.normals.push_back(std::move(normal));
    }
    if (r.next(line)) throw ParseError("unexpected trailing content", r.line_no);
    return arr;
}

std::string write_arrangement(const Arrangement& arr) {
    std::ostringstream os;
    os << "arr " << arr.dim << " " << arr.normals.size() << "\n";
    for (const auto& normal : arr.normals) {
        for (size_t j = 0; j < normal.size(); ++j) {
            if (j) os << " ";
            os << normal[j].get_num().get_str();
            if (normal[j].get_den() != 1) os << "/" << normal[j].get_den().get_str();
        }
        os << "\n";
    }
    return os.str();
}

std::vector<SignVector> parse_covector_file(std::istream& in) {
    LineReader r{in};
    std::string line;
    if (!r.next(line)) throw ParseError("empty file", r.line_no);
    std::istringstream head(line);
    std::string tag;
    uint32_t n = 0;
    if (!(head >> tag >> n) || tag != "om") throw ParseError("expected 'om <n>'", r.line_no);

    std::vector<SignVector> out;
    while (r.next(line)) {
        if (line.size() != n)
            throw ParseError("covector of length " + std::to_string(line.size()) + ", expected " +
                                 std::to_string(n),
                             r.line_no);
        try {
            out.push_back(SignVector::parse(line));
        } catch (const std::invalid_argument& ex) {
            throw ParseError(ex.what(), r.line_no);
        }
    }
    if (out.empty()) throw ParseError("no covectors", r.line_no);
    return out;
}

std::string write_covector_file(const std::vector<SignVector>& covectors) {
    std::ostringstream os;
    os << "om " << (covectors.empty() ? 0 : covectors.front().size()) << "\n";
    for (const auto& v : covectors) os << v.str() << "\n";
    return os.str();
}

Poset parse_poset_file(std::istream& in) {
    LineReader r{in};
    std::string line;
    if (!r.next(line)) throw ParseError("empty file", r.line_no);
    std::istringstream head(line);
    std::string tag;
    uint32_t n = 0;
    if (!(head >> tag >> n) || tag != "poset") throw ParseError("expected 'poset <n>'", r.line_no);

    std::vector<std::pair<uint32_t, uint32_t>> covers;
    std::vector<std::pair<uint32_t, std::string>> labels;
    while (r.next(line)) {
        std::istringstream row(line);
        std::string kind;
        row >> kind;
        if (kind == "cover") {
            uint32_t a, b;
            if (!(row >> a >> b)) throw ParseError("expected 'cover <i> <j>'", r.line_no);
            if (a >= n || b >= n) throw ParseError("cover index out of range", r.line_no);
            covers.emplace_back(a, b);
        } else if (kind == "label") {
            uint32_t i;
            if (!(row >> i)) throw ParseError("expected 'label <i> <text>'", r.line_no);
            if (i >= n) throw ParseError("label index out of range", r.line_no);
            std::string text;
            std::getline(row, text);
            if (!text.empty() && text.front() == ' ') text.erase(0, 1);
            labels.emplace_back(i, text);
        } else {
            throw ParseError("unknown directive '" + kind + "'", r.line_no);
        }
    }
    try {
        Poset p = Poset::from_covers(n, std::move(covers));
        for (auto& [i, text] : labels) p.set_label(i, text);
        return p;
    } catch (const std::invalid_argument& ex) {
        throw ParseError(ex.what(), r.line_no);
    }
}

std::string write_poset_file(const Poset& p) {
    std::ostringstream os;
    os << "poset " << p.size() << "\n";
    for (uint32_t x = 0; x < p.size(); ++x)
        for (uint32_t y : p.upper_covers(x)) os << "cover " << x << " " << y << "\n";
    if (p.has_labels())
        for (uint32_t x = 0; x < p.size(); ++x)
            if (!p.label(x).empty()) os << "label " << x << " " << p.label(x) << "\n";
    return os.str();
}

std::vector<std::vector<uint32_t>> parse_facet_file(std::istream& in, uint32_t* n_vertices) {
    LineReader r{in};
    std::string line;
    std::vector<std::vector<uint32_t>> facets;
    uint32_t max_vertex = 0;
    bool any = false;
    while (r.next(line)) {
        std::istringstream row(line);
        std::vector<uint32_t> facet;
        uint32_t v;
        while (row >> v) {
            facet.push_back(v);
            max_vertex = std::max(max_vertex, v);
            any = true;
        }
        if (!row.eof()) throw ParseError("invalid vertex id", r.line_no);
        if (facet.size() > 24) throw ParseError("facet too large", r.line_no);
        if (!facet.empty()) facets.push_back(std::move(facet));
    }
    if (n_vertices) *n_vertices = any ? max_vertex + 1 : 0;
    return facets;
}

std::string write_facet_file(const OrderComplex& oc) {
    std::ostringstream os;
    for (const auto& f : oc.facets) {
        for (size_t i = 0; i < f.size(); ++i) {
            if (i) os << " ";
            os << f[i];
        }
        os << "\n";
    }
    return os.str();
}

OMInput parse_om_input(std::istream& in) {
    // sniff the header token, then dispatch
    std::streampos start = in.tellg();
    LineReader r{in};
    std::string line;
    if (!r.next(line)) throw ParseError("empty file", r.line_no);
    std::istringstream head(line);
    std::string tag;
    head >> tag;
    in.clear();
    in.seekg(start);
    OMInput out;
    if (tag == "arr")
        out.data = parse_arrangement(in);
    else if (tag == "om")
        out.data = parse_covector_file(in);
    else
        throw ParseError("expected an 'arr' or 'om' file", 1);
    return out;
}

}  // namespace omfib
