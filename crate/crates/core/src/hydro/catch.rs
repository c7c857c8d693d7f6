use crate::error::{Error, Result};
use crate::scalar::Primitive;
use crate::vec3::V3;
use std::cell::RefCell;

/// Adapts fallible field closures to the infallible stencil API by recording
/// the first error and returning NaN.
pub(crate) struct Catch(RefCell<Option<Error>>);

impl Catch {
    pub fn new() -> Self {
        Catch(RefCell::new(None))
    }

    pub fn s<T: Primitive>(&self, r: Result<T>) -> T {
        r.unwrap_or_else(|e| {
            self.0.borrow_mut().get_or_insert(e);
            T::nan()
        })
    }

    pub fn v<T: Primitive>(&self, r: Result<V3<T>>) -> V3<T> {
        r.unwrap_or_else(|e| {
            self.0.borrow_mut().get_or_insert(e);
            [T::nan(); 3]
        })
    }

    pub fn take<X>(self, x: X) -> Result<X> {
        match self.0.into_inner() {
            Some(e) => Err(e),
            None => Ok(x),
        }
    }
}
