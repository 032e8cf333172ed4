#include "addiso/textio.hpp"

#include <cctype>
#include <sstream>

namespace addiso {

namespace {

struct Scanner {
    const std::string& s;
    size_t pos = 0;
    size_t line = 1, col = 1;

    explicit Scanner(const std::string& text) : s(text) {}

    [[noreturn]] void err(const std::string& msg) const {
        fail(Errc::Parse, "line " + std::to_string(line) + ", col " + std::to_string(col) + ": " + msg);
    }

    bool eof() const { return pos >= s.size(); }
    char peek() const { return eof() ? '\0' : s[pos]; }

    void advance() {
        if (eof()) return;
        if (s[pos] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
        ++pos;
    }

    void skip_space() {
        while (!eof()) {
            if (std::isspace(static_cast<unsigned char>(peek()))) {
                advance();
            } else if (peek() == '#') {
                while (!eof() && peek() != '\n') advance();
            } else {
                break;
            }
        }
    }

    void expect(char c) {
        if (peek() != c) err(std::string("expected '") + c + "'");
        advance();
    }

    bool try_consume(char c) {
        if (peek() == c) {
            advance();
            return true;
        }
        return false;
    }

    uint64_t read_uint() {
        if (!std::isdigit(static_cast<unsigned char>(peek()))) err("expected a number");
        uint64_t v = 0;
        while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + uint64_t(peek() - '0');
            if (v > (uint64_t{1} << 31)) err("number too large");
            advance();
        }
        return v;
    }

    std::string read_word() {
        std::string w;
        while (!eof() && (std::isalpha(static_cast<unsigned char>(peek())) || peek() == '-')) {
            w += peek();
            advance();
        }
        return w;
    }

    std::vector<uint64_t> read_uint_list() {
        // '[' already consumed by the caller
        std::vector<uint64_t> v;
        skip_space();
        if (try_consume(']')) return v;
        for (;;) {
            skip_space();
            v.push_back(read_uint());
            skip_space();
            if (try_consume(']')) return v;
            expect(',');
        }
    }
};

FieldL parse_descriptor(Scanner& sc) {
    sc.skip_space();
    if (sc.read_word() != "GF") sc.err("expected 'GF'");
    sc.expect('(');
    sc.skip_space();
    uint32_t p = uint32_t(sc.read_uint());
    uint32_t d = 1;
    sc.skip_space();
    if (sc.try_consume('^')) d = uint32_t(sc.read_uint());
    sc.skip_space();
    sc.expect(')');

    std::optional<std::vector<uint32_t>> g;
    if (sc.try_consume('[')) {
        auto list = sc.read_uint_list();
        g.emplace(list.begin(), list.end());
    }

    uint32_t n = 1;
    std::optional<std::vector<KElem>> h;
    if (sc.try_consume('^')) {
        n = uint32_t(sc.read_uint());
        if (sc.try_consume('[')) {
            auto list = sc.read_uint_list();
            std::vector<KElem> hs;
            for (uint64_t v : list) hs.push_back({uint32_t(v)});
            h = std::move(hs);
        }
    }
    if (d == 0 || n == 0) sc.err("extension degrees must be positive");
    return make_field_pair(p, d, n, std::move(g), std::move(h));
}

LElem parse_element(Scanner& sc, const FieldL& field) {
    const FieldK& kf = field.subfield();
    sc.skip_space();
    if (sc.try_consume('[')) {
        std::vector<KElem> coords;
        sc.skip_space();
        if (!sc.try_consume(']')) {
            for (;;) {
                sc.skip_space();
                if (sc.try_consume('[')) {
                    // nested F_p digit list for one K-coefficient
                    auto digits = sc.read_uint_list();
                    if (digits.size() != kf.degree()) sc.err("K-coefficient digit list has wrong length");
                    std::vector<uint32_t> ds(digits.begin(), digits.end());
                    for (uint32_t x : ds)
                        if (x >= kf.p()) sc.err("digit out of range");
                    coords.push_back(kf.from_coeffs(ds));
                } else {
                    uint64_t v = sc.read_uint();
                    if (v >= kf.size()) sc.err("K-coefficient index out of range");
                    coords.push_back({uint32_t(v)});
                }
                sc.skip_space();
                if (sc.try_consume(']')) break;
                sc.expect(',');
            }
        }
        if (coords.size() != field.degree()) sc.err("element coordinate list has wrong length");
        return field.from_coords(coords);
    }
    uint64_t v = sc.read_uint();
    if (v >= field.size()) sc.err("element index out of range");
    return {uint32_t(v)};
}

struct ParsedCode {
    FieldL field;
    uint32_t k, m;
    std::vector<LElem> entries;
};

ParsedCode parse_code_section(Scanner& sc) {
    sc.skip_space();
    if (sc.read_word() != "field") sc.err("expected 'field'");
    FieldL field = parse_descriptor(sc);
    sc.skip_space();
    if (sc.read_word() != "code") sc.err("expected 'code'");
    sc.skip_space();
    uint32_t k = uint32_t(sc.read_uint());
    sc.skip_space();
    uint32_t m = uint32_t(sc.read_uint());
    if (m == 0) sc.err("code length must be positive");
    std::vector<LElem> entries;
    entries.reserve(size_t(k) * m);
    for (uint64_t i = 0; i < uint64_t(k) * m; ++i) entries.push_back(parse_element(sc, field));
    return {std::move(field), k, m, std::move(entries)};
}

std::string format_elements_row(const FieldL& field, const LElem* row, uint32_t m) {
    std::ostringstream os;
    for (uint32_t c = 0; c < m; ++c) {
        if (c) os << " ";
        os << lelem_to_string(field, row[c]);
    }
    return os.str();
}

}  // namespace

FieldL parse_field_descriptor(const std::string& text) {
    Scanner sc(text);
    FieldL f = parse_descriptor(sc);
    sc.skip_space();
    if (!sc.eof()) sc.err("trailing input after field descriptor");
    return f;
}

std::string format_field_descriptor(const FieldL& field) {
    const FieldK& kf = field.subfield();
    std::ostringstream os;
    os << "GF(" << kf.p();
    if (kf.degree() > 1) os << "^" << kf.degree();
    os << ")";
    if (kf.modulus() != default_modulus_over_prime(kf.prime_field(), kf.degree())) {
        os << "[";
        for (size_t i = 0; i < kf.modulus().size(); ++i) {
            if (i) os << ",";
            os << kf.modulus()[i];
        }
        os << "]";
    }
    bool default_h = field.modulus() == default_modulus_over_k(kf, field.degree());
    if (field.degree() > 1 || !default_h) {
        os << "^" << field.degree();
        if (!default_h) {
            os << "[";
            for (size_t i = 0; i < field.modulus().size(); ++i) {
                if (i) os << ",";
                os << field.modulus()[i].v;
            }
            os << "]";
        }
    }
    return os.str();
}

GenMatrix parse_code_file(const std::string& text) {
    Scanner sc(text);
    ParsedCode pc = parse_code_section(sc);
    sc.skip_space();
    if (!sc.eof()) sc.err("trailing input after code rows");
    return GenMatrix(std::move(pc.field), pc.k, pc.m, std::move(pc.entries));
}

CodeMap parse_map_file(const std::string& text) {
    Scanner sc(text);
    ParsedCode pc = parse_code_section(sc);
    sc.skip_space();
    if (sc.read_word() != "map") sc.err("expected 'map'");
    std::vector<LElem> image;
    image.reserve(size_t(pc.k) * pc.m);
    for (uint64_t i = 0; i < uint64_t(pc.k) * pc.m; ++i) image.push_back(parse_element(sc, pc.field));
    sc.skip_space();
    if (!sc.eof()) sc.err("trailing input after image rows");
    GenMatrix gen(std::move(pc.field), pc.k, pc.m, std::move(pc.entries));
    return make_code_map(std::move(gen), std::move(image));
}

std::string format_code_file(const GenMatrix& a) {
    std::ostringstream os;
    os << "field " << format_field_descriptor(a.field()) << "\n";
    os << "code " << a.k() << " " << a.m() << "\n";
    for (uint32_t r = 0; r < a.k(); ++r)
        os << format_elements_row(a.field(), a.entries().data() + size_t(r) * a.m(), a.m()) << "\n";
    return os.str();
}

std::string format_map_file(const CodeMap& f) {
    std::ostringstream os;
    os << format_code_file(f.source);
    os << "map\n";
    for (uint32_t r = 0; r < f.source.k(); ++r)
        os << format_elements_row(f.source.field(), f.image.data() + size_t(r) * f.source.m(), f.source.m())
           << "\n";
    return os.str();
}

std::string lelem_to_string(const FieldL& field, LElem x) {
    auto cs = field.coords(x);
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < cs.size(); ++i) {
        if (i) os << ",";
        os << cs[i].v;
    }
    os << "]";
    return os.str();
}

std::string kvec_to_string(const KVec& v) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) os << ",";
        os << v[i].v;
    }
    os << ")";
    return os.str();
}

std::string subspace_to_string(const KSubspace& s) {
    std::ostringstream os;
    os << "[";
    for (uint32_t i = 0; i < s.dim(); ++i) {
        if (i) os << ",";
        os << kvec_to_string(s.basis.row(i));
    }
    os << "]";
    return os.str();
}

std::string space_tuple_to_string(const SpaceTuple& t) {
    std::ostringstream os;
    for (size_t i = 0; i < t.spaces.size(); ++i) {
        if (i) os << " ";
        os << subspace_to_string(t.spaces[i]);
    }
    return os.str();
}

std::string matrix_to_string(const KMatrix& m) {
    std::ostringstream os;
    os << "[";
    for (uint32_t i = 0; i < m.rows; ++i) {
        if (i) os << ",";
        os << kvec_to_string(m.row(i));
    }
    os << "]";
    return os.str();
}

std::string monomial_to_string(const MonomialMap& h) {
    std::ostringstream os;
    os << "perm=(";
    for (size_t i = 0; i < h.perm.size(); ++i) {
        if (i) os << ",";
        os << h.perm[i] + 1;  // 1-based in reports
    }
    os << ")";
    for (size_t i = 0; i < h.maps.size(); ++i) os << " g" << i + 1 << "=" << matrix_to_string(h.maps[i]);
    return os.str();
}

}  // namespace addiso
