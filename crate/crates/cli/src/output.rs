//! Output helpers: CSV rows are printed inline by the subcommands; JSON is
//! one object per line so results can be streamed.

#[derive(Clone, Copy)]
pub enum OutputFormat {
    Csv,
    Json,
}

pub fn json_row(fields: &[(&str, serde_json::Value)]) {
    let mut map = serde_json::Map::new();
    for (k, v) in fields {
        map.insert((*k).to_string(), v.clone());
    }
    println!("{}", serde_json::Value::Object(map));
}
