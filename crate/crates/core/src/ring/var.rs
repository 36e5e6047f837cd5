use alloc::format;
use alloc::string::String;
use core::fmt;

/// Variable families, in canonical display order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    /// `x_i`, Laurent.
    X = 0,
    /// `y_i = x_i^{1/2}`, Laurent.
    Y = 1,
    /// `u_i`, power-series side of Cauchy/Littlewood sums.
    U = 2,
    /// `v_j`, double-dual side of the type A Littlewood sum.
    V = 3,
    /// `t`, generating functions.
    T = 4,
    /// `c_m`, the parameter sequence.
    C = 5,
    /// `h_{r,s}`, ninth variation indeterminates.
    H = 6,
}

impl Family {
    /// Families whose exponents may be negative.
    pub fn is_laurent(self) -> bool {
        matches!(self, Family::X | Family::Y)
    }

    fn from_tag(tag: u64) -> Family {
        match tag {
            0 => Family::X,
            1 => Family::Y,
            2 => Family::U,
            3 => Family::V,
            4 => Family::T,
            5 => Family::C,
            _ => Family::H,
        }
    }
}

/// A small set of families, used to designate series variables and gradings.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Families(u8);

impl Families {
    pub const EMPTY: Families = Families(0);

    pub fn of(list: &[Family]) -> Families {
        list.iter().fold(Families(0), |acc, f| acc.with(*f))
    }

    pub fn with(self, f: Family) -> Families {
        Families(self.0 | (1 << f as u8))
    }

    pub fn contains(self, f: Family) -> bool {
        self.0 & (1 << f as u8) != 0
    }
}

/// Decoded view of a [`VarId`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VarKind {
    X(u32),
    Y(u32),
    U(u32),
    V(u32),
    T,
    C(i64),
    H(i64, i64),
}

const TAG_SHIFT: u32 = 60;
const BIAS32: i64 = 1 << 31;

/// A variable identifier, packed so that the derived order is the canonical one:
/// family first (`X < Y < U < V < T < C < H`), then index ascending.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VarId(u64);

impl VarId {
    fn pack(family: Family, payload: u64) -> VarId {
        debug_assert!(payload < (1 << TAG_SHIFT));
        VarId(((family as u64) << TAG_SHIFT) | payload)
    }

    fn indexed(family: Family, i: u32) -> VarId {
        assert!(i >= 1, "variable indices start at 1");
        VarId::pack(family, i as u64)
    }

    pub fn x(i: u32) -> VarId {
        VarId::indexed(Family::X, i)
    }

    pub fn y(i: u32) -> VarId {
        VarId::indexed(Family::Y, i)
    }

    pub fn u(i: u32) -> VarId {
        VarId::indexed(Family::U, i)
    }

    pub fn v(i: u32) -> VarId {
        VarId::indexed(Family::V, i)
    }

    pub fn t() -> VarId {
        VarId::pack(Family::T, 0)
    }

    pub fn c(m: i64) -> VarId {
        assert!((-BIAS32..BIAS32).contains(&m), "c index out of range");
        VarId::pack(Family::C, (m + BIAS32) as u64)
    }

    pub fn h(r: i64, s: i64) -> VarId {
        assert!((1..(1 << 27)).contains(&r), "h_{{r,s}} needs 1 <= r");
        assert!((-BIAS32..BIAS32).contains(&s), "h shift out of range");
        VarId::pack(Family::H, ((r as u64) << 32) | (s + BIAS32) as u64)
    }

    pub fn family(self) -> Family {
        Family::from_tag(self.0 >> TAG_SHIFT)
    }

    fn payload(self) -> u64 {
        self.0 & ((1 << TAG_SHIFT) - 1)
    }

    pub fn kind(self) -> VarKind {
        let p = self.payload();
        match self.family() {
            Family::X => VarKind::X(p as u32),
            Family::Y => VarKind::Y(p as u32),
            Family::U => VarKind::U(p as u32),
            Family::V => VarKind::V(p as u32),
            Family::T => VarKind::T,
            Family::C => VarKind::C(p as i64 - BIAS32),
            Family::H => VarKind::H((p >> 32) as i64, (p & 0xffff_ffff) as i64 - BIAS32),
        }
    }

    /// Index for the single-index families (`x`, `y`, `u`, `v`).
    pub fn index(self) -> Option<u32> {
        match self.kind() {
            VarKind::X(i) | VarKind::Y(i) | VarKind::U(i) | VarKind::V(i) => Some(i),
            _ => None,
        }
    }

    /// External name: `x1`, `y1`, `u1`, `v1`, `t`, `c-3`, `c5`, `h:2:-1`.
    pub fn name(self) -> String {
        match self.kind() {
            VarKind::X(i) => format!("x{i}"),
            VarKind::Y(i) => format!("y{i}"),
            VarKind::U(i) => format!("u{i}"),
            VarKind::V(i) => format!("v{i}"),
            VarKind::T => String::from("t"),
            VarKind::C(m) => format!("c{m}"),
            VarKind::H(r, s) => format!("h:{r}:{s}"),
        }
    }

    /// Inverse of [`VarId::name`].
    pub fn parse(name: &str) -> Option<VarId> {
        if name == "t" {
            return Some(VarId::t());
        }
        if let Some(rest) = name.strip_prefix("h:") {
            let (r, s) = rest.split_once(':')?;
            let r: i64 = r.parse().ok()?;
            let s: i64 = s.parse().ok()?;
            return (r >= 1).then(|| VarId::h(r, s));
        }
        if let Some(rest) = name.strip_prefix('c') {
            let m: i64 = rest.parse().ok()?;
            if rest.starts_with('+') {
                return None;
            }
            return Some(VarId::c(m));
        }
        let mut chars = name.chars();
        let head = chars.next()?;
        let rest = chars.as_str();
        if rest.is_empty() || !rest.bytes().all(|b| b.is_ascii_digit()) || rest.starts_with('0') {
            return None;
        }
        let i: u32 = rest.parse().ok()?;
        match head {
            'x' => Some(VarId::x(i)),
            'y' => Some(VarId::y(i)),
            'u' => Some(VarId::u(i)),
            'v' => Some(VarId::v(i)),
            _ => None,
        }
    }
}

impl fmt::Debug for VarId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

impl fmt::Display for VarId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}
