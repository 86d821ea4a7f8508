#![allow(dead_code)]

pub mod freudenthal;
