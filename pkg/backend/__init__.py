# Backend package for the operator matrix completion calculus
