use std::sync::OnceLock;

use crate::lr::LrContext;
use crate::plethysm::PlethysmMemo;
use crate::symfunc::Tables;

/// Shared computation state: LR caches, transition tables and plethysm memo.
///
/// Every cache is internally synchronized, so `&Context` can be used from
/// several threads. Results never depend on cache contents; a fresh context
/// only changes timings.
#[derive(Default)]
pub struct Context {
    pub(crate) lr: LrContext,
    pub(crate) tables: Tables,
    pub(crate) plethysms: PlethysmMemo,
}

impl Context {
    pub fn new() -> Self {
        Self::default()
    }

    /// Process-wide context used by the convenience methods on `SymFunc`.
    pub fn global() -> &'static Context {
        static GLOBAL: OnceLock<Context> = OnceLock::new();
        GLOBAL.get_or_init(Context::new)
    }

    pub fn lr(&self) -> &LrContext {
        &self.lr
    }
}
