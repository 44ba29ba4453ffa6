#include "alcove/expr.hpp"

#include <cctype>

namespace alcove {

namespace {

class Scanner {
public:
    Scanner(const std::string& text, int rank) : text_(text), rank_(rank) {}

    ObjExpr parse() {
        ObjExpr expr;
        expr.atoms.push_back(atom());
        skip_ws();
        while (!eof()) {
            expect_tensor_sign();
            expr.atoms.push_back(atom());
            skip_ws();
        }
        return expr;
    }

private:
    const std::string& text_;
    int rank_;
    std::size_t pos_ = 0;

    bool eof() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }
    void skip_ws() {
        while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(pos_, msg); }

    void expect_tensor_sign() {
        skip_ws();
        if (eof()) fail("expected '*' between atoms");
        if (peek() == '*') {
            ++pos_;
            return;
        }
        // UTF-8 tensor-product sign (0xE2 0x8A 0x97)
        if (pos_ + 2 < text_.size() && static_cast<unsigned char>(text_[pos_]) == 0xE2 &&
            static_cast<unsigned char>(text_[pos_ + 1]) == 0x8A &&
            static_cast<unsigned char>(text_[pos_ + 2]) == 0x97) {
            pos_ += 3;
            return;
        }
        fail("expected '*' between atoms");
    }

    std::string ident() {
        skip_ws();
        if (eof() || !std::isalpha(static_cast<unsigned char>(peek()))) fail("expected an atom name");
        std::size_t start = pos_;
        while (!eof() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) ++pos_;
        return text_.substr(start, pos_ - start);
    }

    std::vector<int> word() {
        skip_ws();
        if (!eof() && peek() == 'e') {
            ++pos_;
            return {};
        }
        std::vector<int> letters;
        while (!eof() && peek() == 's') {
            ++pos_;
            if (eof() || !std::isdigit(static_cast<unsigned char>(peek())))
                fail("generator must be 's' followed by a digit");
            const int idx = peek() - '0';
            if (idx > rank_) fail("unknown generator index s" + std::string(1, peek()));
            letters.push_back(idx);
            ++pos_;
        }
        if (letters.empty()) fail("expected a generator word ('e' or s0..s" + std::to_string(rank_) + ")");
        return letters;
    }

    Coord integer() {
        skip_ws();
        std::size_t start = pos_;
        if (!eof() && (peek() == '-' || peek() == '+')) ++pos_;
        if (eof() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an integer");
        while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        return std::stoll(text_.substr(start, pos_ - start));
    }

    Weight weight() {
        std::vector<Coord> coords{integer()};
        skip_ws();
        while (!eof() && peek() == ',') {
            ++pos_;
            coords.push_back(integer());
            skip_ws();
        }
        if (static_cast<int>(coords.size()) != rank_)
            fail("weight has " + std::to_string(coords.size()) + " coordinates, rank is " +
                 std::to_string(rank_));
        return Weight(std::move(coords));
    }

    ExprAtom atom() {
        skip_ws();
        ExprAtom a;
        a.pos = pos_;
        const std::string head = ident();
        skip_ws();
        if (eof() || peek() != '(') fail("expected '(' after '" + head + "'");
        ++pos_;
        if (head == "L" || head == "Delta") {
            a.kind = head == "L" ? LabelKind::Simple : LabelKind::Weyl;
            a.word = word();
            skip_ws();
            if (!eof() && peek() == ';') {
                ++pos_;
                a.weight = weight();
            }
        } else {
            a.kind = head == "T" ? LabelKind::Tilting : LabelKind::Custom;
            if (a.kind == LabelKind::Custom) a.name = head;
            skip_ws();
            if (!eof() && (peek() == 's' || peek() == 'e')) {
                if (a.kind == LabelKind::Custom) fail("Custom atoms take a weight, not a word");
                fail("T atoms take a weight, not a word");
            }
            a.weight = weight();
        }
        skip_ws();
        if (eof() || peek() != ')') fail("expected ')'");
        ++pos_;
        return a;
    }
};

} // namespace

ObjExpr parse_expr(const std::string& text, int rank) {
    Scanner s(text, rank);
    return s.parse();
}

} // namespace alcove
