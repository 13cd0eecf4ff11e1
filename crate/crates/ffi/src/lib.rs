//! C interface to `minor-density`.
//!
//! Graphs are opaque `MdGraph` handles owned by the caller and released
//! with `md_graph_free`. Every fallible call returns an `MdStatus`; on
//! failure `md_last_error` describes the problem. Rationals cross the
//! boundary as `int64_t` numerator and denominator pairs.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use minor_density::catalog::{membership, next_above, witness, Membership};
use minor_density::families::FamilySpec;
use minor_density::minor::{balance_check_with, BalanceMode, SearchConfig};
use minor_density::plants::{plant_classify, PlantResult};
use minor_density::{emit_graph6, parse_graph6, t_density, Error, Graph, Rational};

/// Opaque graph handle.
pub struct MdGraph(Graph);

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MdStatus {
    Ok = 0,
    Null = 1,
    Parse = 2,
    Domain = 3,
    Capacity = 4,
    Budget = 5,
    Overflow = 6,
    Panic = 7,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MdMembership {
    InB = 0,
    NotInB = 1,
    /// Above 2 and a documented member.
    KnownAbove2 = 2,
    /// Above 2 and not decided.
    Undecided = 3,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MdPlantClass {
    NotPlant = 0,
    PlantEq = 1,
    PlantPlus = 2,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn status_of(e: &Error) -> MdStatus {
    match e {
        Error::Graph6(_) => MdStatus::Parse,
        Error::Capacity(_) | Error::SizeLimit { .. } => MdStatus::Capacity,
        Error::BudgetExceeded(_) => MdStatus::Budget,
        Error::Overflow(_) => MdStatus::Overflow,
        _ => MdStatus::Domain,
    }
}

struct Fail(MdStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail(status_of(&e), e.to_string())
    }
}

fn null(what: &str) -> Fail {
    Fail(MdStatus::Null, format!("{what} is null"))
}

/// Runs `f`, recording any failure or panic as the last error.
fn guard(f: impl FnOnce() -> Result<(), Fail>) -> MdStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error("");
            MdStatus::Ok
        }
        Ok(Err(Fail(s, msg))) => {
            set_error(&msg);
            s
        }
        Err(_) => {
            set_error("internal panic");
            MdStatus::Panic
        }
    }
}

unsafe fn text<'a>(s: *const c_char, what: &str) -> Result<&'a str, Fail> {
    if s.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(s).to_str().map_err(|_| Fail(MdStatus::Parse, format!("{what} is not UTF-8")))
}

unsafe fn graph<'a>(g: *const MdGraph) -> Result<&'a Graph, Fail> {
    g.as_ref().map(|g| &g.0).ok_or_else(|| null("graph"))
}

unsafe fn put<T>(out: *mut T, v: T, what: &str) -> Result<(), Fail> {
    if out.is_null() {
        return Err(null(what));
    }
    out.write(v);
    Ok(())
}

unsafe fn put_rational(num: *mut i64, den: *mut i64, r: Rational) -> Result<(), Fail> {
    let overflow = || Fail(MdStatus::Overflow, format!("{r} does not fit in 64 bits"));
    let n = i64::try_from(r.numer()).map_err(|_| overflow())?;
    let d = i64::try_from(r.denom()).map_err(|_| overflow())?;
    put(num, n, "numerator output")?;
    put(den, d, "denominator output")
}

fn rational(num: i64, den: i64) -> Result<Rational, Fail> {
    Rational::try_new(num as i128, den as i128).ok_or_else(|| Fail(MdStatus::Domain, "zero denominator".into()))
}

unsafe fn put_graph(out: *mut *mut MdGraph, g: Graph) -> Result<(), Fail> {
    if out.is_null() {
        return Err(null("graph output"));
    }
    out.write(Box::into_raw(Box::new(MdGraph(g))));
    Ok(())
}

/// Message for the last failed call on this thread, or an empty string.
/// Valid until the next call on the same thread.
#[no_mangle]
pub extern "C" fn md_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Parses one graph6 line.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn md_graph_from_graph6(text: *const c_char, out: *mut *mut MdGraph) -> MdStatus {
    guard(|| put_graph(out, parse_graph6(self::text(text, "graph6 text")?.trim())?))
}

/// Builds a family member from a spec such as `gkm:2,3` or `bowtie-star:2`.
///
/// # Safety
/// `spec` must be a NUL-terminated string and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn md_graph_from_family(spec: *const c_char, out: *mut *mut MdGraph) -> MdStatus {
    guard(|| {
        let spec: FamilySpec = text(spec, "family spec")?.parse()?;
        put_graph(out, spec.build()?)
    })
}

/// # Safety
/// `g` must come from this library and not be freed twice. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn md_graph_free(g: *mut MdGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Vertex count, or 0 for a null handle.
///
/// # Safety
/// `g` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn md_graph_order(g: *const MdGraph) -> usize {
    g.as_ref().map_or(0, |g| g.0.order())
}

/// Edge count, or 0 for a null handle.
///
/// # Safety
/// `g` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn md_graph_size(g: *const MdGraph) -> usize {
    g.as_ref().map_or(0, |g| g.0.size())
}

/// graph6 text for `g`; release it with `md_string_free`.
///
/// # Safety
/// `g` must be a live handle and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn md_graph_to_graph6(g: *const MdGraph, out: *mut *mut c_char) -> MdStatus {
    guard(|| {
        let s = CString::new(emit_graph6(graph(g)?)).expect("graph6 is printable ASCII");
        put(out, s.into_raw(), "string output")
    })
}

/// # Safety
/// `s` must come from this library and not be freed twice. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn md_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Edges per vertex.
///
/// # Safety
/// `g` must be a live handle; `num` and `den` writable pointers.
#[no_mangle]
pub unsafe extern "C" fn md_density(g: *const MdGraph, num: *mut i64, den: *mut i64) -> MdStatus {
    guard(|| put_rational(num, den, graph(g)?.density()?))
}

/// `(e - C(t,2)) / (v - t)`, or 0 when `e <= C(t,2)`.
///
/// # Safety
/// `g` must be a live handle; `num` and `den` writable pointers.
#[no_mangle]
pub unsafe extern "C" fn md_t_density(g: *const MdGraph, t: usize, num: *mut i64, den: *mut i64) -> MdStatus {
    guard(|| put_rational(num, den, t_density(graph(g)?, t)))
}

/// Balance verdict. A negative `t` compares plain densities; otherwise
/// `t`-densities. `budget` 0 means the default.
///
/// # Safety
/// `g` must be a live handle and `verdict` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn md_balance_check(
    g: *const MdGraph,
    t: i32,
    strict: bool,
    budget: u64,
    verdict: *mut bool,
) -> MdStatus {
    guard(|| {
        let mode = BalanceMode::from_parts(usize::try_from(t).ok(), strict);
        let mut cfg = SearchConfig::default();
        if budget > 0 {
            cfg.budget = budget;
        }
        let r = balance_check_with(graph(g)?, mode, &cfg)?;
        put(verdict, r.verdict, "verdict output")
    })
}

/// # Safety
/// `g` must be a live handle and `class` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn md_plant_classify(g: *const MdGraph, class: *mut MdPlantClass) -> MdStatus {
    guard(|| {
        let c = match plant_classify(graph(g)?) {
            PlantResult::NotPlant => MdPlantClass::NotPlant,
            PlantResult::PlantEq(_) => MdPlantClass::PlantEq,
            PlantResult::PlantPlus(_) => MdPlantClass::PlantPlus,
        };
        put(class, c, "class output")
    })
}

/// Is `num/den` a critical density?
///
/// # Safety
/// `out` must be a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn md_catalog_membership(num: i64, den: i64, out: *mut MdMembership) -> MdStatus {
    guard(|| {
        let m = match membership(rational(num, den)?) {
            Membership::InB { .. } => MdMembership::InB,
            Membership::NotInB => MdMembership::NotInB,
            Membership::UnknownAbove2 { known_hit: Some(_) } => MdMembership::KnownAbove2,
            Membership::UnknownAbove2 { known_hit: None } => MdMembership::Undecided,
        };
        put(out, m, "membership output")
    })
}

/// Least catalog value above `num/den` (up to 2).
///
/// # Safety
/// `out_num` and `out_den` must be writable pointers.
#[no_mangle]
pub unsafe extern "C" fn md_catalog_next_above(num: i64, den: i64, out_num: *mut i64, out_den: *mut i64) -> MdStatus {
    guard(|| put_rational(out_num, out_den, next_above(rational(num, den)?)?.beta))
}

/// Witness graph for a catalog value.
///
/// # Safety
/// `out` must be a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn md_catalog_witness(num: i64, den: i64, out: *mut *mut MdGraph) -> MdStatus {
    guard(|| {
        let x = rational(num, den)?;
        match membership(x) {
            Membership::InB { entry } => put_graph(out, witness(&entry)?),
            _ => Err(Fail(MdStatus::Domain, format!("{x} is not in the catalog"))),
        }
    })
}
