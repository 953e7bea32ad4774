#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <variant>

#include "ga/multivector.hpp"

namespace ga {

enum class UnaryOp { Negate, Reversion, GradeInvolution, Even, Odd };
enum class BinaryOp { Add, Subtract, Geometric, Outer, LeftContract, RightContract, Scalar };

struct ExprNode;
using ExprPtr = std::unique_ptr<ExprNode>;

/// Calculator AST. Scalar literals are kept as exact rationals regardless of
/// the evaluation scalar kind; decimals convert exactly.
struct ExprNode {
    struct Number {
        Rational value;
    };
    struct Blade {
        IndexSet indices;
    };
    struct Unary {
        UnaryOp op;
        ExprPtr child;
    };
    struct Binary {
        BinaryOp op;
        ExprPtr lhs;
        ExprPtr rhs;
    };
    struct GradeProject {
        ExprPtr child;
        long grade;
    };

    std::variant<Number, Blade, Unary, Binary, GradeProject> node;
};

/// Parses the calculator grammar. Digit-shorthand blades ("e21") normalize to
/// sorted index sets with the permutation sign; duplicate indices and index 0
/// are rejected. Throws ParseError with a 1-based column.
ExprPtr parse(std::string_view input);

template <class S>
Multivector<S> eval(const ExprNode& ast, const SignaturePtr<S>& sig) {
    struct Visitor {
        const SignaturePtr<S>& sig;

        Multivector<S> operator()(const ExprNode::Number& n) const {
            return Multivector<S>::scalar(sig, scalar_from_rational<S>(n.value));
        }
        Multivector<S> operator()(const ExprNode::Blade& b) const {
            return Multivector<S>::blade(sig, b.indices);
        }
        Multivector<S> operator()(const ExprNode::Unary& u) const {
            Multivector<S> c = eval(*u.child, sig);
            switch (u.op) {
                case UnaryOp::Negate: return -c;
                case UnaryOp::Reversion: return reversion(c);
                case UnaryOp::GradeInvolution: return grade_involution(c);
                case UnaryOp::Even: return even_odd_project(c, 0);
                case UnaryOp::Odd: return even_odd_project(c, 1);
            }
            throw Error("unreachable unary op");
        }
        Multivector<S> operator()(const ExprNode::Binary& b) const {
            Multivector<S> l = eval(*b.lhs, sig);
            Multivector<S> r = eval(*b.rhs, sig);
            switch (b.op) {
                case BinaryOp::Add: return l + r;
                case BinaryOp::Subtract: return l - r;
                case BinaryOp::Geometric: return geometric_product(l, r);
                case BinaryOp::Outer: return outer_product(l, r);
                case BinaryOp::LeftContract: return left_contraction(l, r);
                case BinaryOp::RightContract: return right_contraction(l, r);
                case BinaryOp::Scalar: return scalar_product(l, r);
            }
            throw Error("unreachable binary op");
        }
        Multivector<S> operator()(const ExprNode::GradeProject& g) const {
            return grade_project(eval(*g.child, sig), g.grade);
        }
    };
    return std::visit(Visitor{sig}, ast.node);
}

/// Canonical rendering; parse(format(X)) evaluates back to X.
template <class S>
std::string format(const Multivector<S>& x) {
    return to_string(x);
}

} // namespace ga
