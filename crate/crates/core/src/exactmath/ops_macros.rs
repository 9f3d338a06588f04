// Operator boilerplate for scalar newtypes that provide `add_ref`, `sub_ref`,
// `mul_ref`, `neg_ref` (and `div_ref` for fields) as inherent methods.

macro_rules! forward_ring_ops {
    ($t:ty) => {
        impl ::std::ops::Add for $t {
            type Output = $t;
            fn add(self, rhs: $t) -> $t {
                self.add_ref(&rhs)
            }
        }
        impl<'a> ::std::ops::Add<&'a $t> for $t {
            type Output = $t;
            fn add(self, rhs: &'a $t) -> $t {
                self.add_ref(rhs)
            }
        }
        impl<'a, 'b> ::std::ops::Add<&'b $t> for &'a $t {
            type Output = $t;
            fn add(self, rhs: &'b $t) -> $t {
                self.add_ref(rhs)
            }
        }
        impl ::std::ops::Sub for $t {
            type Output = $t;
            fn sub(self, rhs: $t) -> $t {
                self.sub_ref(&rhs)
            }
        }
        impl<'a> ::std::ops::Sub<&'a $t> for $t {
            type Output = $t;
            fn sub(self, rhs: &'a $t) -> $t {
                self.sub_ref(rhs)
            }
        }
        impl<'a, 'b> ::std::ops::Sub<&'b $t> for &'a $t {
            type Output = $t;
            fn sub(self, rhs: &'b $t) -> $t {
                self.sub_ref(rhs)
            }
        }
        impl ::std::ops::Mul for $t {
            type Output = $t;
            fn mul(self, rhs: $t) -> $t {
                self.mul_ref(&rhs)
            }
        }
        impl<'a> ::std::ops::Mul<&'a $t> for $t {
            type Output = $t;
            fn mul(self, rhs: &'a $t) -> $t {
                self.mul_ref(rhs)
            }
        }
        impl<'a, 'b> ::std::ops::Mul<&'b $t> for &'a $t {
            type Output = $t;
            fn mul(self, rhs: &'b $t) -> $t {
                self.mul_ref(rhs)
            }
        }
        impl ::std::ops::Neg for $t {
            type Output = $t;
            fn neg(self) -> $t {
                self.neg_ref()
            }
        }
        impl<'a> ::std::ops::Neg for &'a $t {
            type Output = $t;
            fn neg(self) -> $t {
                self.neg_ref()
            }
        }
    };
}

macro_rules! forward_div_op {
    ($t:ty) => {
        impl ::std::ops::Div for $t {
            type Output = $t;
            fn div(self, rhs: $t) -> $t {
                self.div_ref(&rhs)
            }
        }
        impl<'a> ::std::ops::Div<&'a $t> for $t {
            type Output = $t;
            fn div(self, rhs: &'a $t) -> $t {
                self.div_ref(rhs)
            }
        }
        impl<'a, 'b> ::std::ops::Div<&'b $t> for &'a $t {
            type Output = $t;
            fn div(self, rhs: &'b $t) -> $t {
                self.div_ref(rhs)
            }
        }
    };
}

pub(crate) use forward_div_op;
pub(crate) use forward_ring_ops;
