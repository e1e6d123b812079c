//! C ABI over `hopfpoly`. Objects are opaque handles built from JSON documents;
//! reports come back as JSON strings owned by the caller and released with
//! `hp_string_free`. Every call returns an `HpStatus`; on failure the message is
//! available from `hp_last_error` on the same thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use hopfpoly::document::{self, AntipodeFormat, MethodChoice, Object, ObjectDocument, VerifyLevel};
use hopfpoly::{Budget, Character, Error};

/// Status codes. The nonzero values below 5 match the command-line exit codes.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HpStatus {
    Ok = 0,
    Io = 1,
    Validation = 2,
    BudgetExceeded = 3,
    Disagreement = 4,
    NullArgument = 5,
    InvalidUtf8 = 6,
    Panic = 7,
}

pub const HP_METHOD_ORACLE: u32 = 0;
pub const HP_METHOD_ORIENTATION: u32 = 1;
pub const HP_METHOD_BOTH: u32 = 2;

pub const HP_ANTIPODE_TAKEUCHI: u32 = 0;
pub const HP_ANTIPODE_CANCELLATION_FREE: u32 = 1;
pub const HP_ANTIPODE_BOTH: u32 = 2;

pub const HP_VERIFY_QUICK: u32 = 0;
pub const HP_VERIFY_FULL: u32 = 1;

/// Passed as `count_colorings` to skip the coloring counts.
pub const HP_NO_COLORINGS: i64 = -1;

/// A validated object document.
pub struct HpObject {
    object: Object,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(message: String) {
    let c = CString::new(message.replace('\0', " ")).expect("interior nul removed");
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> HpStatus {
    match e.exit_code() {
        2 => HpStatus::Validation,
        3 => HpStatus::BudgetExceeded,
        4 => HpStatus::Disagreement,
        _ => HpStatus::Io,
    }
}

struct Failure(HpStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(status_of(&e), e.to_string())
    }
}

fn guarded(body: impl FnOnce() -> Result<(), Failure>) -> HpStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => HpStatus::Ok,
        Ok(Err(Failure(status, message))) => {
            set_error(message);
            status
        }
        Err(_) => {
            set_error("internal panic".to_string());
            HpStatus::Panic
        }
    }
}

unsafe fn read_str<'a>(p: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(Failure(HpStatus::NullArgument, format!("{what} is null")));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Failure(HpStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

unsafe fn object_ref<'a>(p: *const HpObject) -> Result<&'a Object, Failure> {
    p.as_ref()
        .map(|h| &h.object)
        .ok_or_else(|| Failure(HpStatus::NullArgument, "object is null".to_string()))
}

unsafe fn write_out(out: *mut *mut c_char, text: String) -> Result<(), Failure> {
    if out.is_null() {
        return Err(Failure(HpStatus::NullArgument, "output pointer is null".to_string()));
    }
    let c = CString::new(text).map_err(|_| Failure(HpStatus::Io, "output contains nul".to_string()))?;
    *out = c.into_raw();
    Ok(())
}

fn budget_of(steps: u64) -> Budget {
    if steps == 0 {
        Budget::default()
    } else {
        Budget::uniform(steps)
    }
}

fn selector<T: Copy>(value: u32, choices: &[T], what: &str) -> Result<T, Failure> {
    choices
        .get(value as usize)
        .copied()
        .ok_or_else(|| Failure(HpStatus::Validation, format!("unknown {what} {value}")))
}

fn json<T: serde::Serialize>(report: &T) -> Result<String, Failure> {
    serde_json::to_string(report).map_err(|e| Error::from(e).into())
}

/// Parses and validates a JSON object document.
///
/// # Safety
/// `json` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hp_object_from_json(json: *const c_char, out: *mut *mut HpObject) -> HpStatus {
    guarded(|| {
        let text = read_str(json, "json")?;
        if out.is_null() {
            return Err(Failure(HpStatus::NullArgument, "output pointer is null".to_string()));
        }
        let object = ObjectDocument::from_json(text)?.load()?;
        *out = Box::into_raw(Box::new(HpObject { object }));
        Ok(())
    })
}

/// # Safety
/// `object` must come from `hp_object_from_json` and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn hp_object_free(object: *mut HpObject) {
    if !object.is_null() {
        drop(Box::from_raw(object));
    }
}

/// The canonical document of an object.
///
/// # Safety
/// `object` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hp_object_to_json(object: *const HpObject, out: *mut *mut c_char) -> HpStatus {
    guarded(|| {
        let obj = object_ref(object)?;
        write_out(out, obj.to_document().to_json())
    })
}

/// `χ(n)` as an exact rational string such as `"-5/6"`.
///
/// # Safety
/// `object` must be a live handle, `character` a nul-terminated string, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn hp_chi_eval(
    object: *const HpObject,
    character: *const c_char,
    n: i64,
    budget_steps: u64,
    out: *mut *mut c_char,
) -> HpStatus {
    guarded(|| {
        let obj = object_ref(object)?;
        let zeta = Character::by_name(read_str(character, "character")?)?;
        let value = obj.as_invariant().chi_formula(&zeta, n, &budget_of(budget_steps))?;
        write_out(out, document::rational_string(&value))
    })
}

/// The chi report as JSON: polynomial, evaluations, breakdown, certificate.
///
/// # Safety
/// `evals` must point to `eval_count` integers (or be null when the count is 0).
#[no_mangle]
pub unsafe extern "C" fn hp_chi_json(
    object: *const HpObject,
    character: *const c_char,
    evals: *const i64,
    eval_count: usize,
    method: u32,
    budget_steps: u64,
    out: *mut *mut c_char,
) -> HpStatus {
    guarded(|| {
        let obj = object_ref(object)?;
        let name = read_str(character, "character")?;
        let points: &[i64] = if eval_count == 0 {
            &[]
        } else if evals.is_null() {
            return Err(Failure(HpStatus::NullArgument, "evals is null".to_string()));
        } else {
            std::slice::from_raw_parts(evals, eval_count)
        };
        let method = selector(
            method,
            &[MethodChoice::Oracle, MethodChoice::Orientation, MethodChoice::Both],
            "method",
        )?;
        let report = document::cmd_chi(obj, name, points, method, &budget_of(budget_steps))?;
        write_out(out, json(&report)?)
    })
}

/// # Safety
/// `object` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hp_antipode_json(
    object: *const HpObject,
    format: u32,
    budget_steps: u64,
    out: *mut *mut c_char,
) -> HpStatus {
    guarded(|| {
        let obj = object_ref(object)?;
        let format = selector(
            format,
            &[AntipodeFormat::Takeuchi, AntipodeFormat::CancellationFree, AntipodeFormat::Both],
            "antipode format",
        )?;
        let report = document::cmd_antipode(obj, format, &budget_of(budget_steps))?;
        write_out(out, json(&report)?)
    })
}

/// `count_colorings` is a number of colors, or `HP_NO_COLORINGS`.
///
/// # Safety
/// `object` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hp_orientations_json(
    object: *const HpObject,
    acyclic_only: bool,
    count_colorings: i64,
    budget_steps: u64,
    out: *mut *mut c_char,
) -> HpStatus {
    guarded(|| {
        let obj = object_ref(object)?;
        let colors = if count_colorings < 0 {
            None
        } else {
            Some(u32::try_from(count_colorings).map_err(|_| {
                Failure(HpStatus::Validation, format!("{count_colorings} colors is too many"))
            })?)
        };
        let report = document::cmd_orientations(obj, acyclic_only, colors, &budget_of(budget_steps))?;
        write_out(out, json(&report)?)
    })
}

/// Runs the cross-checks; a failing check returns `Disagreement`.
///
/// # Safety
/// `object` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hp_verify_json(
    object: *const HpObject,
    level: u32,
    budget_steps: u64,
    out: *mut *mut c_char,
) -> HpStatus {
    guarded(|| {
        let obj = object_ref(object)?;
        let level = selector(level, &[VerifyLevel::Quick, VerifyLevel::Full], "verify level")?;
        let report = document::cmd_verify(obj, level, &budget_of(budget_steps))?;
        write_out(out, json(&report)?)
    })
}

/// The message of the last failure on this thread, or null. Valid until the
/// next failing call on the same thread; do not free.
#[no_mangle]
pub extern "C" fn hp_last_error() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// # Safety
/// `s` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn hp_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
