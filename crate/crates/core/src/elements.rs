//! Registry of the transuranium elements `Z = 92..=137` and the five-tier
//! Coulomb field-strength classification.

use std::fmt;

use crate::error::{Error, Result};

pub const FIRST_Z: u32 = 92;
pub const LAST_Z: u32 = 137;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ElementInfo {
    pub z: u32,
    pub symbol: &'static str,
    pub name: &'static str,
    /// Not (yet) synthesized; true for `Z >= 119`.
    pub hypothetical: bool,
    /// Alternative spellings and informal names found in the source text,
    /// including misprinted symbols.
    pub aliases: &'static [&'static str],
}

impl ElementInfo {
    /// Hydrogen-like ion label such as `U^{91+}`.
    pub fn ion_label(&self) -> String {
        format!("{}^{{{}+}}", self.symbol, self.z - 1)
    }
}

macro_rules! element {
    ($z:expr, $sym:expr, $name:expr) => {
        element!($z, $sym, $name, [])
    };
    ($z:expr, $sym:expr, $name:expr, [$($alias:expr),*]) => {
        ElementInfo {
            z: $z,
            symbol: $sym,
            name: $name,
            hypothetical: $z >= 119,
            aliases: &[$($alias),*],
        }
    };
}

static REGISTRY: [ElementInfo; 46] = [
    element!(92, "U", "Uranium"),
    element!(93, "Np", "Neptunium"),
    element!(94, "Pu", "Plutonium"),
    element!(95, "Am", "Americium"),
    element!(96, "Cm", "Curium", ["Cu"]),
    element!(97, "Bk", "Berkelium"),
    element!(98, "Cf", "Californium"),
    element!(99, "Es", "Einsteinium"),
    element!(100, "Fm", "Fermium"),
    element!(101, "Md", "Mendelevium"),
    element!(102, "No", "Nobelium"),
    element!(103, "Lr", "Lawrencium"),
    element!(104, "Rf", "Rutherfordium"),
    element!(105, "Db", "Dubnium"),
    element!(106, "Sg", "Seaborgium"),
    element!(107, "Bh", "Bohrium"),
    element!(108, "Hs", "Hassium"),
    element!(109, "Mt", "Meitnerium"),
    element!(110, "Ds", "Darmstadtium"),
    element!(111, "Rg", "Roentgenium"),
    element!(112, "Cn", "Copernicium"),
    element!(113, "Nh", "Nihonium"),
    element!(114, "Fl", "Flerovium"),
    element!(115, "Mc", "Moscovium"),
    element!(116, "Lv", "Livermorium"),
    element!(117, "Ts", "Tennessine"),
    element!(118, "Og", "Oganesson"),
    element!(119, "Uue", "Ununennium"),
    element!(120, "Ubn", "Unbinilium", ["Ube"]),
    element!(121, "Ubu", "Unbiunium"),
    element!(122, "Ubb", "Unbibium"),
    element!(123, "Ubt", "Unbitrium"),
    element!(124, "Ubq", "Unbiquadium"),
    element!(125, "Ubp", "Unbipentium"),
    element!(126, "Ubh", "Unbihexium"),
    element!(127, "Ubs", "Unbiseptium", ["Ubh"]),
    element!(128, "Ubo", "Unbioctium", ["Unbiocitium"]),
    element!(129, "Ube", "Unbiennium"),
    element!(130, "Utn", "Untrinilium"),
    element!(131, "Utu", "Untriunium"),
    element!(132, "Utb", "Untribium"),
    element!(133, "Utt", "Untritrium"),
    element!(134, "Utq", "Untriquadium"),
    element!(135, "Utp", "Untripentium"),
    element!(136, "Uth", "Untrihexium"),
    element!(137, "Uts", "Untriseptium", ["Feynmanium"]),
];

pub fn registry() -> &'static [ElementInfo] {
    &REGISTRY
}

pub fn element_info(z: u32) -> Result<&'static ElementInfo> {
    if !(FIRST_Z..=LAST_Z).contains(&z) {
        return Err(Error::NotFound(z));
    }
    Ok(&REGISTRY[(z - FIRST_Z) as usize])
}

/// Coulomb field strength tier, ordered by increasing winding number.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FieldStrengthClass {
    Strong,
    SuperStrong,
    UltraStrong,
    SuperUltraStrong,
    UltraUltraStrong,
}

impl FieldStrengthClass {
    pub const ALL: [FieldStrengthClass; 5] = [
        FieldStrengthClass::Strong,
        FieldStrengthClass::SuperStrong,
        FieldStrengthClass::UltraStrong,
        FieldStrengthClass::SuperUltraStrong,
        FieldStrengthClass::UltraUltraStrong,
    ];

    /// Inclusive charge range of the tier.
    pub fn charge_range(self) -> (u32, u32) {
        match self {
            FieldStrengthClass::Strong => (92, 116),
            FieldStrengthClass::SuperStrong => (117, 125),
            FieldStrengthClass::UltraStrong => (126, 128),
            FieldStrengthClass::SuperUltraStrong => (129, 130),
            FieldStrengthClass::UltraUltraStrong => (131, 137),
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            FieldStrengthClass::Strong => "Strong",
            FieldStrengthClass::SuperStrong => "Super-Strong",
            FieldStrengthClass::UltraStrong => "Ultra-Strong",
            FieldStrengthClass::SuperUltraStrong => "Super-Ultra Strong",
            FieldStrengthClass::UltraUltraStrong => "Ultra-Ultra Strong",
        }
    }

    pub fn description(self) -> &'static str {
        match self {
            FieldStrengthClass::Strong => "no loops",
            FieldStrengthClass::SuperStrong => "one loop, double necklace",
            FieldStrengthClass::UltraStrong => "two loops, triple necklace",
            FieldStrengthClass::SuperUltraStrong => "three loops",
            FieldStrengthClass::UltraUltraStrong => "many loops",
        }
    }

    /// Rounded winding numbers the tier's loop description corresponds to.
    /// `None` upper bound means "at least".
    pub fn expected_winding(self) -> (u32, Option<u32>) {
        match self {
            FieldStrengthClass::Strong => (0, Some(1)),
            FieldStrengthClass::SuperStrong => (2, Some(2)),
            FieldStrengthClass::UltraStrong => (3, Some(3)),
            FieldStrengthClass::SuperUltraStrong => (4, Some(4)),
            FieldStrengthClass::UltraUltraStrong => (5, None),
        }
    }

    pub fn admits_winding(self, winding: u32) -> bool {
        let (lo, hi) = self.expected_winding();
        winding >= lo && hi.is_none_or(|hi| winding <= hi)
    }
}

impl fmt::Display for FieldStrengthClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ({})", self.label(), self.description())
    }
}

pub fn classify(z: u32) -> Result<FieldStrengthClass> {
    let class = match z {
        92..=116 => FieldStrengthClass::Strong,
        117..=125 => FieldStrengthClass::SuperStrong,
        126..=128 => FieldStrengthClass::UltraStrong,
        129..=130 => FieldStrengthClass::SuperUltraStrong,
        131..=137 => FieldStrengthClass::UltraUltraStrong,
        _ => return Err(Error::NotFound(z)),
    };
    Ok(class)
}
