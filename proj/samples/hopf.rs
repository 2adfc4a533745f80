# Complete system for Mon<a,b : ab^2a^2b^2 = b> with x = ab^2a.
letters: a b x
ax^2b -> x
ab -> x^2
x^2bx -> b
x^2b^2 -> bxbx
weights: a=4 b=1 x=2; precedence: x>b>a
